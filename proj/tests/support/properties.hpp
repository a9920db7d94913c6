#pragma once
// Randomized and exhaustive property checks. Each returns a PropertyResult so
// the same code drives the doctest suite and the acceptance binary.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "liaison/chain_search.hpp"
#include "liaison/error.hpp"
#include "liaison/glicci.hpp"
#include "liaison/hvector.hpp"
#include "liaison/linkage.hpp"
#include "liaison/report.hpp"
#include "oracles.hpp"

namespace props {

using namespace liaison;
using Int = std::int64_t;

inline constexpr std::uint64_t kSeed = 0x5eed'1a15'0000'2024ULL;
inline constexpr std::size_t kTrials = 1000;

struct PropertyResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && trials > 0; }
  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
  std::string summary() const {
    std::ostringstream os;
    os << name << ": " << trials << " trials, " << failures << " failure(s)";
    if (failures) os << " [" << first_failure << "]";
    return os.str();
  }
};

inline Int uniform(std::mt19937_64& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

inline const std::vector<std::string>& lattice_surfaces() {
  static const std::vector<std::string> ids{"cubic_scroll", "del_pezzo_4", "castelnuovo_5", "bordiga_6",
                                            "cubic_surface_p3", "quadric_p3"};
  return ids;
}

inline std::shared_ptr<const SurfaceModel> random_surface(std::mt19937_64& rng) {
  const auto& ids = lattice_surfaces();
  return get_surface(ids[static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(ids.size()) - 1))]);
}

inline DivisorClass random_class(std::mt19937_64& rng, const BasisTag& b, Int bound = 9) {
  std::vector<Int> v(b.rank());
  for (auto& x : v) x = uniform(rng, -bound, bound);
  return DivisorClass(b, std::move(v));
}

inline std::vector<Int> coeffs(const DivisorClass& c) { return {c.coeffs().begin(), c.coeffs().end()}; }

inline oracle::Lattice lattice_of(const SurfaceModel& s) {
  return {s.basis().kind == BasisTag::Kind::quadric, coeffs(s.hyperplane()), coeffs(s.canonical())};
}

inline RaoTag random_rao(std::mt19937_64& rng) {
  switch (uniform(rng, 0, 3)) {
    case 0: return RaoTag::zero();
    case 1: return RaoTag::simple_k(uniform(rng, -5, 5));
    case 2: return RaoTag::M(uniform(rng, 1, 4), uniform(rng, -5, 5));
    default: {
      RaoTag t = RaoTag::M(uniform(rng, 1, 3), uniform(rng, -5, 5));
      t.dualized = true;
      return t;
    }
  }
}

// ---------------------------------------------------------------------------

inline PropertyResult intersection_form() {
  PropertyResult r{"intersection form bilinear and symmetric"};
  std::mt19937_64 rng(kSeed);
  for (std::size_t t = 0; t < kTrials; ++t, ++r.trials) {
    const auto s = random_surface(rng);
    const auto L = lattice_of(*s);
    const auto x = random_class(rng, s->basis()), y = random_class(rng, s->basis()),
               z = random_class(rng, s->basis());
    const Int k = uniform(rng, -7, 7);
    if (intersect(x, y) != intersect(y, x)) r.fail("asymmetric at " + x.to_string() + "," + y.to_string());
    if (intersect(x + y, z) != intersect(x, z) + intersect(y, z)) r.fail("not additive at " + x.to_string());
    if (intersect(k * x, y) != k * intersect(x, y)) r.fail("not homogeneous at " + x.to_string());
    if (intersect(x, y) != L.dot(coeffs(x), coeffs(y))) r.fail("disagrees with hand pairing at " + x.to_string());
  }
  return r;
}

inline PropertyResult adjunction_parity() {
  PropertyResult r{"adjunction parity"};
  std::mt19937_64 rng(kSeed + 1);
  for (std::size_t t = 0; t < kTrials; ++t, ++r.trials) {
    const auto s = random_surface(rng);
    const auto L = lattice_of(*s);
    const auto c = random_class(rng, s->basis(), 20);
    const Int twice = L.dot(coeffs(c), coeffs(c)) + L.dot(coeffs(c), L.k);
    if (twice % 2 != 0) {
      r.fail("odd C^2+CK for " + c.to_string() + " on " + s->id());
      continue;
    }
    try {
      if (arithmetic_genus(c, *s) != twice / 2 + 1) r.fail("genus mismatch for " + c.to_string());
    } catch (const Error& e) {
      r.fail(std::string("threw: ") + e.what());
    }
  }
  return r;
}

inline PropertyResult biliaison_vs_adjunction() {
  PropertyResult r{"biliaison update agrees with direct adjunction"};
  std::mt19937_64 rng(kSeed + 2);
  for (std::size_t t = 0; t < kTrials; ++t, ++r.trials) {
    const auto s = random_surface(rng);
    const auto L = lattice_of(*s);
    const auto cls = random_class(rng, s->basis());
    const Int h = uniform(rng, -4, 4);
    const auto c = CurveRecord::on_surface(s, cls, random_rao(rng), "random");
    const auto moved = elementary_biliaison(c, h);
    auto v = coeffs(cls);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += h * L.h[i];
    const Int d = L.dot(v, L.h);
    const Int g = (L.dot(v, v) + L.dot(v, L.k)) / 2 + 1;
    const auto [fd, fg] = biliaison_invariants(c.degree(), c.genus(), h, *s);
    if (moved.degree() != d || moved.genus() != g) r.fail("record disagrees at " + cls.to_string());
    if (fd != d || fg != g) r.fail("closed form disagrees at " + cls.to_string() + " h=" + std::to_string(h));
    if (coeffs(moved.witness()->cls) != v) r.fail("class is not C + hH at " + cls.to_string());
    if (moved.rao() != rao_after_biliaison(c.rao(), h)) r.fail("rao tag not shifted");
  }
  return r;
}

inline PropertyResult g_link_laws() {
  PropertyResult r{"g_link involution and two-link composition"};
  std::mt19937_64 rng(kSeed + 3);
  for (std::size_t t = 0; t < kTrials; ++t, ++r.trials) {
    const auto s = random_surface(rng);
    const auto c = CurveRecord::on_surface(s, random_class(rng, s->basis()), random_rao(rng), "random");
    const Int m1 = uniform(rng, -3, 6), m2 = uniform(rng, -3, 6);
    const auto once = g_link_on_surface(c, m1);
    const auto back = g_link_on_surface(once, m1);
    if (back.witness()->cls != c.witness()->cls) r.fail("not an involution on classes");
    if (back.rao() != c.rao()) r.fail("rao tag does not return: " + back.rao().to_string());
    if (c.degree() + once.degree() != degree(ag_divisor(*s, m1), *s)) r.fail("degrees do not add up");
    const auto two = g_link_on_surface(once, m2);
    const auto bil = elementary_biliaison(c, m2 - m1);
    if (two.witness()->cls != bil.witness()->cls) r.fail("two links are not a biliaison (class)");
    if (two.degree() != bil.degree() || two.genus() != bil.genus()) r.fail("two links are not a biliaison (d,g)");
    if (two.rao() != bil.rao()) r.fail("two links are not a biliaison (rao) " + two.rao().to_string());
  }
  return r;
}

inline PropertyResult ci_link_involution() {
  PropertyResult r{"ci_link involution"};
  std::mt19937_64 rng(kSeed + 4);
  for (std::size_t t = 0; t < kTrials; ++t, ++r.trials) {
    const Int f1 = uniform(rng, 1, 8), f2 = uniform(rng, 1, 8);
    const Int d = uniform(rng, 0, f1 * f2);
    const Int g = uniform(rng, -10, 40);
    const auto c = CurveRecord::abstract(d, g, random_rao(rng), "random");
    const auto l = ci_link_p3(c, f1, f2);
    const auto back = ci_link_p3(l, f1, f2);
    if (back.degree() != d || back.genus() != g || back.rao() != c.rao()) {
      r.fail("CI(" + std::to_string(f1) + "," + std::to_string(f2) + ") at (" + std::to_string(d) + "," +
             std::to_string(g) + ")");
    }
    // genus linkage formula written independently: g' - g = (f1+f2-4)(d'-d)/2
    if (2 * (l.genus() - g) != (f1 + f2 - 4) * (l.degree() - d)) r.fail("linked genus formula");
  }
  return r;
}

// O-sequence z fitting under w (z(i) <= w(s - i)), grown greedily at random
inline std::vector<Int> random_sub_sequence(std::mt19937_64& rng, const HVector& w, int codim) {
  const Int s = w.top_degree();
  std::vector<Int> z{1};
  for (Int i = 1; i <= s; ++i) {
    const Int cap_w = w[static_cast<std::size_t>(s - i)];
    const Int cap_mac = i == 1 ? codim : macaulay_bound(z.back(), i - 1);
    const Int cap = std::min(cap_w, cap_mac);
    if (cap <= 0 || uniform(rng, 0, 5) == 0) break;
    z.push_back(uniform(rng, 0, cap));
    if (z.back() == 0) break;
  }
  return oracle::trimmed(z);
}

inline PropertyResult h_link_laws() {
  PropertyResult r{"h-vector link involution and mass conservation"};
  auto check = [&](const HVector& z, const HVector& w) {
    HVector res;
    try {
      res = link_h_vector(z, w);
    } catch (const LinkError&) {
      return false;
    }
    ++r.trials;
    if (z.mass() + res.mass() != w.mass()) r.fail("mass not conserved at " + z.to_string() + " in " + w.to_string());
    try {
      if (link_h_vector(res, w) != z) r.fail("not an involution at " + z.to_string() + " in " + w.to_string());
    } catch (const LinkError& e) {
      r.fail(std::string("link back threw: ") + e.what());
    }
    return true;
  };
  // exhaustive: every O-sequence inside every Gorenstein w of mass <= 16
  for (int codim : {2, 3}) {
    for (const auto& w : gorenstein_h_vectors(codim, 16, 10)) {
      const Int s = w.top_degree();
      std::vector<Int> z{1};
      auto rec = [&](auto&& self) -> void {
        const auto zi = oracle::trimmed(z);
        if (oracle::lex_is_O_sequence(zi, codim)) check(HVector(zi, codim), w);
        const Int i = static_cast<Int>(z.size());
        if (i > s) return;
        for (Int v = 1; v <= w[static_cast<std::size_t>(s - i)]; ++v) {
          z.push_back(v);
          self(self);
          z.pop_back();
        }
      };
      rec(rec);
    }
  }
  // random up to mass 40
  std::mt19937_64 rng(kSeed + 5);
  const auto big3 = gorenstein_h_vectors(3, 40, 12);
  const auto big2 = gorenstein_h_vectors(2, 40, 20);
  std::size_t random_ok = 0;
  for (std::size_t t = 0; random_ok < kTrials && t < 50 * kTrials; ++t) {
    const int codim = uniform(rng, 0, 1) ? 3 : 2;
    const auto& pool = codim == 3 ? big3 : big2;
    const auto& w = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(pool.size()) - 1))];
    if (check(HVector(random_sub_sequence(rng, w, codim), codim), w)) ++random_ok;
  }
  if (random_ok < kTrials) r.fail("too few valid random triples: " + std::to_string(random_ok));
  return r;
}

inline PropertyResult character_sums() {
  PropertyResult r{"character sums"};
  std::mt19937_64 rng(kSeed + 6);
  auto verify = [&](const std::vector<Int>& phi, Int d, const std::string& what) {
    ++r.trials;
    try {
      const auto g = postulation_character(phi);
      Int s0 = 0, s1 = 0;
      for (std::size_t n = 0; n < g.values.size(); ++n) {
        s0 += g.values[n];
        s1 += static_cast<Int>(n) * g.values[n];
      }
      if (s0 != 0 || s1 != d || g.degree != d) r.fail("sums off for " + what);
      return g;
    } catch (const Error& e) {
      r.fail(what + " threw " + e.what());
      return PostulationCharacter{};
    }
  };
  // ACM curves in P3: phi is the double cumulative sum of a codim-2 O-sequence,
  // and gamma = -Delta h
  for (std::size_t t = 0; t < kTrials; ++t) {
    std::vector<Int> h{1};
    while (h.size() < 12 && uniform(rng, 0, 6) != 0) {
      const Int cap = h.size() == 1 ? 2 : macaulay_bound(h.back(), static_cast<Int>(h.size()) - 1);
      const Int v = uniform(rng, 0, cap);
      if (v == 0) break;
      h.push_back(v);
    }
    Int d = 0;
    for (Int x : h) d += x;
    std::vector<Int> phi;
    Int first = 0, second = 0;
    for (std::size_t n = 0; n < h.size() + 4; ++n) {
      first += n < h.size() ? h[n] : 0;
      second += first;
      phi.push_back(second);
    }
    const auto g = verify(phi, d, "acm h-vector");
    for (std::size_t n = 0; n <= h.size(); ++n) {
      const Int expect = -((n < h.size() ? h[n] : 0) - (n ? h[n - 1] : 0));
      if (g[n] != expect) {
        r.fail("gamma differs from -Delta h");
        break;
      }
    }
  }
  // arbitrary Hilbert functions that become linear
  for (std::size_t t = 0; t < kTrials; ++t) {
    const Int d = uniform(rng, 1, 15);
    std::vector<Int> phi{1};
    const Int len = uniform(rng, 1, 8);
    for (Int n = 1; n < len; ++n) phi.push_back(phi.back() + uniform(rng, 0, 3 * d));
    for (int k = 0; k < 3; ++k) phi.push_back(phi.back() + d);
    verify(phi, d, "random phi");
  }
  return r;
}

inline PropertyResult macaulay_vs_lex() {
  PropertyResult r{"Macaulay bound equals lex-segment growth"};
  for (int vars : {2, 3, 4}) {
    for (int i = 1; i <= (vars == 2 ? 30 : vars == 3 ? 14 : 7); ++i) {
      const Int ni = oracle::binom(i + vars - 1, vars - 1);
      for (Int h = 0; h <= ni; ++h, ++r.trials) {
        const Int lib = macaulay_bound(h, i), lex = oracle::lex_growth(vars, i, h);
        if (lib != lex) {
          r.fail("h=" + std::to_string(h) + " i=" + std::to_string(i) + ": " + std::to_string(lib) + " vs " +
                 std::to_string(lex));
        }
      }
    }
  }
  return r;
}

inline PropertyResult generic_are_O_sequences() {
  PropertyResult r{"generic h-vectors are O-sequences"};
  for (Int n = 1; n <= 10000; ++n) {
    for (auto amb : {PointAmbient::P2, PointAmbient::P3}) {
      ++r.trials;
      const auto h = generic_points_h_vector(n, amb);
      if (!is_O_sequence(h) || h.mass() != n) r.fail("n=" + std::to_string(n));
    }
    if (n <= 2000) {
      for (Int e : {1, 2, 3, 4}) {
        ++r.trials;
        const auto h = generic_points_h_vector(n, PointAmbient::P3, e);
        if (!is_O_sequence(h) || h.mass() != n) r.fail("on surface e=" + std::to_string(e) + " n=" + std::to_string(n));
      }
    }
  }
  return r;
}

inline PropertyResult gorenstein_truncation() {
  PropertyResult r{"Gorenstein test: SI definition and truncation"};
  std::mt19937_64 rng(kSeed + 7);
  std::size_t accepted = 0;
  for (std::size_t t = 0; t < 20 * kTrials; ++t, ++r.trials) {
    const Int s = uniform(rng, 0, 10);
    const Int half = s / 2;
    std::vector<Int> first{1};
    for (Int i = 1; i <= half; ++i) {
      const Int cap = oracle::binom(i + 2, 2);
      // mostly-increasing to hit accepted vectors often
      const Int lo = std::max<Int>(0, first.back() - 1);
      first.push_back(uniform(rng, std::min(lo, cap), std::min(cap, first.back() + 4)));
    }
    std::vector<Int> w(static_cast<std::size_t>(s + 1));
    for (Int i = 0; i <= s; ++i) w[static_cast<std::size_t>(i)] = first[static_cast<std::size_t>(std::min(i, s - i))];
    if (std::find(w.begin(), w.end(), 0) != w.end()) continue;
    std::vector<Int> delta;
    for (Int i = 0; i <= half; ++i) delta.push_back(first[static_cast<std::size_t>(i)] - (i ? first[static_cast<std::size_t>(i - 1)] : 0));
    const bool expect = std::all_of(delta.begin(), delta.end(), [](Int x) { return x >= 0; }) &&
                        oracle::lex_is_O_sequence(oracle::trimmed(delta), 2);
    const HVector hw(w, 3);
    const bool got = is_gorenstein_h_vector(hw);
    if (got != expect) r.fail("disagrees with the SI definition at " + hw.to_string());
    if (!got) continue;
    ++accepted;
    // every symmetric truncation of an accepted vector is accepted
    for (Int k = 0; k <= half; ++k) {
      for (Int s2 : {2 * k, 2 * k + 1}) {
        if (s2 > s) continue;
        std::vector<Int> u(static_cast<std::size_t>(s2 + 1));
        for (Int i = 0; i <= s2; ++i) u[static_cast<std::size_t>(i)] = first[static_cast<std::size_t>(std::min(i, s2 - i))];
        if (!is_gorenstein_h_vector(HVector(u, 3))) r.fail("truncation rejected: " + HVector(u, 3).to_string());
      }
    }
  }
  if (accepted < kTrials) r.fail("only " + std::to_string(accepted) + " accepted samples");
  return r;
}

inline PropertyResult search_determinism() {
  PropertyResult r{"search determinism across worker counts"};
  std::vector<std::pair<Int, Int>> targets;
  for (const auto& a : acm_curves_in_p4(9)) targets.emplace_back(a.degree, a.genus);
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  targets.emplace_back(10, 9);
  targets.emplace_back(11, 7);
  for (auto [d, g] : targets) {
    std::string ref;
    for (unsigned w : {1u, 2u, 4u}) {
      ChainSearchConfig cfg;
      cfg.surfaces = {"cubic_scroll", "del_pezzo_4", "castelnuovo_5", "bordiga_6"};
      cfg.ascending_only = true;
      cfg.max_steps = 4;
      cfg.workers = w;
      const auto rep = ascending_chain_search(SearchTarget::invariants(d, g), cfg);
      auto j = to_json(rep);
      j["bounds"].erase("workers");
      const auto dump = j.dump();
      ++r.trials;
      if (w == 1) ref = dump;
      else if (dump != ref) r.fail("chain search (" + std::to_string(d) + "," + std::to_string(g) + ") workers=" + std::to_string(w));
    }
  }
  for (auto amb : {PointAmbient::P2, PointAmbient::P3}) {
    for (Int n = 1; n <= (amb == PointAmbient::P2 ? 30 : 19); ++n) {
      for (auto mode : {GlicciMode::full, GlicciMode::descending_only})
      for (int adm = 0; adm < 4; ++adm) {
        std::string ref;
        for (unsigned w : {1u, 2u, 4u}) {
          GlicciConfig cfg;
          cfg.ambient = amb;
          cfg.mode = mode;
          cfg.admissibility = adm == 0 ? Admissibility::generic
                              : adm == 3 ? Admissibility::permissive
                                         : Admissibility::on_surface;
          cfg.surface_degree = adm == 1 ? 2 : 3;
          cfg.workers = w;
          const auto dump = to_json(glicci_chain(n, cfg)).dump();
          ++r.trials;
          if (w == 1) ref = dump;
          else if (dump != ref) r.fail("glicci n=" + std::to_string(n) + " workers=" + std::to_string(w));
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// curve_geometry laws

inline PropertyResult profile_additivity() {
  PropertyResult r{"secant profile additivity and k-secant partition"};
  std::mt19937_64 rng(kSeed + 8);
  const auto s = get_surface("del_pezzo_4");
  DivisorClass all_lines = DivisorClass::zero(s->basis());
  for (const auto& l : s->lines().classes) all_lines = all_lines + l.cls;
  for (std::size_t t = 0; t < kTrials; ++t, ++r.trials) {
    const auto c = CurveRecord::on_surface(s, random_class(rng, s->basis()), RaoTag::unknown(), "random");
    const auto prof = multisecant_profile(c);
    Int sum = 0;
    for (const auto& e : prof.entries) sum += e.value;
    if (sum != intersect(c.witness()->cls, all_lines)) r.fail("profile sum at " + c.witness()->cls.to_string());
    std::size_t covered = 0;
    for (const auto& [k, mult] : prof.summary) {
      const auto ks = k_secant_lines(c, k);
      if (ks.size() != mult) r.fail("k-secant count differs at k=" + std::to_string(k));
      covered += ks.size();
    }
    if (covered != s->lines().size()) r.fail("k-secant sets do not cover the lines");
  }
  return r;
}

inline PropertyResult union_and_rao_laws() {
  PropertyResult r{"disjoint union and rao shift laws"};
  std::mt19937_64 rng(kSeed + 9);
  for (std::size_t t = 0; t < kTrials; ++t, ++r.trials) {
    auto rnd = [&] { return CurveRecord::abstract(uniform(rng, 1, 20), uniform(rng, -3, 30), RaoTag::unknown(), "r"); };
    const auto a = rnd(), b = rnd(), c = rnd();
    const auto ab = disjoint_union(a, b), ba = disjoint_union(b, a);
    const auto l = disjoint_union(ab, c), rr = disjoint_union(a, disjoint_union(b, c));
    if (ab.degree() != ba.degree() || ab.genus() != ba.genus()) r.fail("union not commutative");
    if (l.degree() != rr.degree() || l.genus() != rr.genus()) r.fail("union not associative");
    // chi additivity: 1 - g
    if (1 - ab.genus() != (1 - a.genus()) + (1 - b.genus())) r.fail("chi not additive");
    const auto tag = random_rao(rng);
    const Int h1 = uniform(rng, -6, 6), h2 = uniform(rng, -6, 6);
    if (rao_after_biliaison(rao_after_biliaison(tag, h1), h2) != rao_after_biliaison(tag, h1 + h2)) r.fail("rao shift not additive");
  }
  return r;
}

inline PropertyResult rao_telescoping() {
  PropertyResult r{"chain rao shift telescopes"};
  std::mt19937_64 rng(kSeed + 10);
  for (std::size_t t = 0; t < kTrials; ++t, ++r.trials) {
    const auto s = random_surface(rng);
    Chain chain;
    chain.start = CurveRecord::on_surface(s, random_class(rng, s->basis(), 4), RaoTag::simple_k(uniform(rng, -3, 3)), "start");
    Int total = 0;
    const Int steps = uniform(rng, 1, 6);
    for (Int k = 0; k < steps; ++k) {
      ChainStep st;
      st.kind = ChainStep::Kind::biliaison;
      st.h = uniform(rng, -2, 3);
      st.before = chain.end();
      st.after = elementary_biliaison(st.before, st.h);
      total += st.h;
      chain.steps.push_back(std::move(st));
    }
    try {
      chain.validate();
    } catch (const Error& e) {
      r.fail(std::string("validate: ") + e.what());
    }
    if (chain.end().rao().shift != chain.start.rao().shift + total) r.fail("shift does not telescope");
    if (chain.total_height() != total) r.fail("total height");
  }
  return r;
}

inline std::vector<std::function<PropertyResult()>> all() {
  return {intersection_form, adjunction_parity,   biliaison_vs_adjunction, g_link_laws,
          ci_link_involution, h_link_laws,        character_sums,          macaulay_vs_lex,
          generic_are_O_sequences, gorenstein_truncation, search_determinism, profile_additivity,
          union_and_rao_laws, rao_telescoping};
}

}  // namespace props
