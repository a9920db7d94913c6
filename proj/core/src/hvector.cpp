#include "liaison/hvector.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "liaison/checked.hpp"
#include "liaison/error.hpp"

namespace liaison {

namespace ck = checked;
using Int = std::int64_t;

namespace {

std::string join(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

void trim(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

HVector::HVector(std::vector<Int> entries, int codim) : entries_(std::move(entries)), codim_(codim) {
  if (codim < 1) throw InvalidArgument("h-vector codimension must be positive");
  for (Int x : entries_)
    if (x < 0) throw InvalidArgument("h-vector entries must be nonnegative: " + join(entries_));
  trim(entries_);
}

HVector::HVector(std::initializer_list<Int> entries, int codim)
    : HVector(std::vector<Int>(entries), codim) {}

Int HVector::mass() const {
  Int m = 0;
  for (Int x : entries_) m = ck::add(m, x);
  return m;
}

std::string HVector::to_string() const { return join(entries_); }

Int macaulay_bound(Int h, Int i) {
  if (i < 1) throw InvalidArgument("Macaulay bound needs i >= 1");
  if (h < 0) throw InvalidArgument("Macaulay bound of a negative value");
  Int rem = h, out = 0;
  for (Int t = i; t >= 1 && rem > 0; --t) {
    // largest k with C(k, t) <= rem
    Int k = t, c = 1;
    for (;;) {
      const Int next = ck::mul(c, k + 1) / (k + 1 - t);
      if (next > rem) break;
      c = next;
      ++k;
    }
    out = ck::add(out, ck::binomial(k + 1, t + 1));
    rem -= c;
  }
  return out;
}

bool is_O_sequence(const HVector& h) {
  if (h.empty() || h[0] != 1) return false;
  if (h[1] > h.codim()) return false;
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    if (h[i + 1] > macaulay_bound(h[i], static_cast<Int>(i))) return false;
  }
  return true;
}

HVector generic_points_h_vector(Int n, PointAmbient ambient, std::optional<Int> surface_degree) {
  if (n < 1) throw InvalidArgument("number of points must be positive");
  if (surface_degree && *surface_degree < 1) throw InvalidArgument("surface degree must be positive");
  const Int r = static_cast<Int>(ambient);
  std::vector<Int> h;
  Int remaining = n;
  for (Int i = 0; remaining > 0; ++i) {
    Int cap = ck::binomial(i + r - 1, r - 1);
    if (surface_degree && i >= *surface_degree) cap -= ck::binomial(i - *surface_degree + r - 1, r - 1);
    const Int v = std::min(cap, remaining);
    h.push_back(v);
    remaining -= v;
  }
  return HVector(std::move(h), static_cast<int>(r));
}

namespace {

bool symmetric(const HVector& h) {
  const auto& e = h.entries();
  return std::equal(e.begin(), e.begin() + e.size() / 2, e.rbegin());
}

}  // namespace

bool is_gorenstein_h_vector(const HVector& h) {
  if (h.codim() != 2 && h.codim() != 3) {
    throw InvalidArgument("Gorenstein test is implemented for codimension 2 and 3 only");
  }
  if (h.empty() || h[0] != 1 || !symmetric(h)) return false;
  if (h.codim() == 2) return is_O_sequence(h);
  // SI: first differences up to the middle form an O-sequence in two variables
  const std::size_t half = static_cast<std::size_t>(h.top_degree()) / 2;
  std::vector<Int> delta;
  for (std::size_t i = 0; i <= half; ++i) {
    const Int d = h[i] - (i ? h[i - 1] : 0);
    if (d < 0) return false;
    delta.push_back(d);
  }
  if (h[1] > 3) return false;
  return is_O_sequence(HVector(std::move(delta), 2));
}

HVector link_h_vector(const HVector& z, const HVector& w) {
  if (z.codim() != w.codim()) throw InvalidArgument("linking h-vectors of different codimension");
  if (w.empty()) throw LinkError("the linking scheme is empty", 0);
  const Int s = w.top_degree();
  if (z.top_degree() > s) {
    throw LinkError("Z " + z.to_string() + " has generators past the socle degree of W " + w.to_string(),
                    static_cast<std::size_t>(s + 1));
  }
  std::vector<Int> r(static_cast<std::size_t>(s + 1));
  for (Int i = 0; i <= s; ++i) {
    const Int v = w[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(s - i)];
    if (v < 0) {
      throw LinkError("Z " + z.to_string() + " is not contained in W " + w.to_string() +
                          " at degree " + std::to_string(s - i),
                      static_cast<std::size_t>(i));
    }
    r[static_cast<std::size_t>(i)] = v;
  }
  HVector res(std::move(r), w.codim());
  if (res.empty()) throw LinkError("residual of " + z.to_string() + " in " + w.to_string() + " is empty", 0);
  if (!is_O_sequence(res)) {
    std::size_t bad = 0;
    if (res[0] != 1) bad = 0;
    else if (res[1] > res.codim()) bad = 1;
    else {
      for (std::size_t i = 1; i + 1 < res.size(); ++i) {
        if (res[i + 1] > macaulay_bound(res[i], static_cast<Int>(i))) {
          bad = i + 1;
          break;
        }
      }
    }
    throw LinkError("residual " + res.to_string() + " is not an O-sequence", bad);
  }
  return res;
}

std::vector<HVector> gorenstein_h_vectors(int codim, Int max_mass, Int max_socle) {
  if (codim != 2 && codim != 3) throw InvalidArgument("Gorenstein enumeration supports codimension 2 and 3");
  std::vector<HVector> out;
  for (Int s = 0; s <= max_socle; ++s) {
    const Int half = s / 2;
    auto mult = [s](Int j) -> Int { return j == s - j ? 1 : 2; };
    std::vector<Int> w(static_cast<std::size_t>(half + 1));
    w[0] = 1;
    // d = w[i] - w[i-1], an O-sequence in codim - 1 variables
    std::function<void(Int, Int, Int)> rec = [&](Int i, Int prev_delta, Int acc) {
      Int lb = acc;
      for (Int j = i; j <= half; ++j) lb += mult(j) * w[static_cast<std::size_t>(i - 1)];
      if (lb > max_mass) return;
      if (i > half) {
        std::vector<Int> full(static_cast<std::size_t>(s + 1));
        for (Int j = 0; j <= half; ++j) {
          full[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(j)];
          full[static_cast<std::size_t>(s - j)] = w[static_cast<std::size_t>(j)];
        }
        out.emplace_back(std::move(full), codim);
        return;
      }
      const Int hi = i == 1 ? codim - 1 : macaulay_bound(prev_delta, i - 1);
      for (Int d = 0; d <= hi; ++d) {
        w[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i - 1)] + d;
        rec(i + 1, d, acc + mult(i) * w[static_cast<std::size_t>(i)]);
      }
    };
    rec(1, 1, mult(0));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Int, Int> acm_curve_invariants(const HVector& h) {
  Int d = 0, g = 1;
  for (std::size_t i = 0; i < h.size(); ++i) {
    d = ck::add(d, h[i]);
    g = ck::add(g, ck::mul(static_cast<Int>(i) - 1, h[i]));
  }
  return {d, g};
}

std::vector<AcmCandidate> acm_curves_in_p4(Int max_degree) {
  std::vector<AcmCandidate> out;
  std::vector<Int> h{1, 3};
  auto up_ok = [](const std::vector<Int>& v) {
    const Int d = std::accumulate(v.begin(), v.end(), Int{0});
    Int partial = 0;
    for (std::size_t n = 0; n < v.size(); ++n) {
      partial += v[n];
      if (partial < std::min(d, 3 * static_cast<Int>(n) + 1)) return false;
    }
    return true;
  };
  std::function<void(Int)> rec = [&](Int mass) {
    if (up_ok(h)) {
      HVector hv(h, 3);
      auto [d, g] = acm_curve_invariants(hv);
      out.push_back({std::move(hv), d, g});
    }
    const Int i = static_cast<Int>(h.size()) - 1;
    const Int hi = std::min(macaulay_bound(h.back(), i), max_degree - mass);
    for (Int v = 1; v <= hi; ++v) {
      h.push_back(v);
      rec(mass + v);
      h.pop_back();
    }
  };
  if (max_degree >= 4) rec(4);
  std::sort(out.begin(), out.end(), [](const AcmCandidate& a, const AcmCandidate& b) {
    return std::tie(a.degree, a.genus, a.h) < std::tie(b.degree, b.genus, b.h);
  });
  return out;
}

std::string PostulationCharacter::to_string() const { return join(values); }

PostulationCharacter postulation_character(const std::vector<Int>& phi) {
  const std::size_t n = phi.size();
  if (n < 3) throw InvalidArgument("Hilbert function needs at least three values to certify stabilization");
  const Int slope = ck::sub(phi[n - 1], phi[n - 2]);
  if (slope != ck::sub(phi[n - 2], phi[n - 3]) || slope < 1) {
    throw InvalidArgument("Hilbert function " + join(phi) + " has not stabilized to a linear polynomial");
  }
  auto at = [&](std::ptrdiff_t i) -> Int { return i < 0 ? 0 : phi[static_cast<std::size_t>(i)]; };
  PostulationCharacter g;
  g.degree = slope;
  for (std::size_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::ptrdiff_t>(k);
    const Int d3 = at(i) - 3 * at(i - 1) + 3 * at(i - 2) - at(i - 3);
    g.values.push_back(-d3);
  }
  trim(g.values);
  Int sum = 0, moment = 0;
  for (std::size_t k = 0; k < g.values.size(); ++k) {
    sum += g.values[k];
    moment += static_cast<Int>(k) * g.values[k];
  }
  if (sum != 0 || moment != g.degree) {
    throw Error("postulation character " + g.to_string() + " violates sum = 0 or sum n*gamma(n) = d");
  }
  return g;
}

bool character_is_positive(const PostulationCharacter& g) {
  if (g[0] != -1) return false;
  std::size_t s0 = 1;
  while (s0 < g.values.size() && g.values[s0] < 0) ++s0;
  for (std::size_t n = s0; n < g.values.size(); ++n)
    if (g.values[n] < 0) return false;
  return true;
}

bool character_is_connected(const PostulationCharacter& g) {
  bool started = false, ended = false;
  for (Int v : g.values) {
    if (v > 0) {
      if (ended) return false;
      started = true;
    } else if (started) {
      ended = true;
    }
  }
  return true;
}

}  // namespace liaison
