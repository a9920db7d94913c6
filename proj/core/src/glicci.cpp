#include "liaison/glicci.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "liaison/error.hpp"

namespace liaison {

using Int = std::int64_t;

std::string to_string(GlicciMode m) { return m == GlicciMode::full ? "full" : "descending_only"; }

std::string to_string(Admissibility a) {
  switch (a) {
    case Admissibility::generic: return "generic";
    case Admissibility::on_surface: return "on_surface";
    case Admissibility::permissive: return "permissive";
  }
  return "?";
}

namespace {

bool contained(const HVector& z, const HVector& w) {
  if (z.top_degree() > w.top_degree()) return false;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] > w[i]) return false;
  return true;
}

// link_h_vector without exceptions, for the inner loop
std::optional<HVector> try_link(const HVector& z, const HVector& w) {
  if (!contained(z, w)) return std::nullopt;
  const Int s = w.top_degree();
  std::vector<Int> r(static_cast<std::size_t>(s + 1));
  for (Int i = 0; i <= s; ++i) {
    const Int v = w[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(s - i)];
    if (v < 0) return std::nullopt;
    r[static_cast<std::size_t>(i)] = v;
  }
  HVector res(std::move(r), w.codim());
  if (res.empty() || !is_O_sequence(res)) return std::nullopt;
  return res;
}

}  // namespace

std::vector<HVector> ag_candidates_containing(const HVector& z, Int max_mass, Int max_socle) {
  std::vector<HVector> out;
  for (auto& w : gorenstein_h_vectors(z.codim(), max_mass, max_socle))
    if (contained(z, w)) out.push_back(std::move(w));
  return out;
}

void PointChain::validate() const {
  const HVector* prev = &start;
  for (std::size_t i = 0; i < links.size(); ++i) {
    const auto& l = links[i];
    const std::string where = "link " + std::to_string(i);
    if (l.from != *prev) throw Error(where + ": does not continue from " + prev->to_string());
    if (!is_gorenstein_h_vector(l.w)) throw Error(where + ": " + l.w.to_string() + " is not Gorenstein");
    if (link_h_vector(l.from, l.w) != l.to) throw Error(where + ": residual does not re-derive");
    prev = &l.to;
  }
  if (*prev != HVector({1}, start.codim())) throw Error("chain does not end at a single point");
}

namespace {

struct Edge {
  HVector w;
  HVector y;
};

class GlicciSearch {
public:
  GlicciSearch(Int n, const GlicciConfig& cfg) : cfg_(cfg) {
    if (n < 1) throw InvalidArgument("glicci search needs at least one point");
    if (!cfg_.max_intermediate) cfg_.max_intermediate = 3 * n;
    if (*cfg_.max_intermediate < n) throw InvalidArgument("max_intermediate is below the starting degree");
    if (cfg_.max_socle < 0) throw InvalidArgument("max_socle must be nonnegative");
    if (cfg_.admissibility == Admissibility::on_surface && cfg_.surface_degree < 1)
      throw InvalidArgument("surface degree must be positive");
    if (cfg_.workers == 0) cfg_.workers = 1;
    codim_ = static_cast<int>(cfg_.ambient);
    start_ = generic(n);
    goal_ = HVector({1}, codim_);
    gor_ = gorenstein_h_vectors(codim_, 2 * *cfg_.max_intermediate, cfg_.max_socle);
    rep_.points = n;
  }

  GlicciReport run() {
    rep_.bounds = cfg_;
    rep_.gorenstein_candidates = gor_.size();
    rep_.chain.start = start_;
    if (start_ == goal_) {
      rep_.found = true;
      rep_.outcome = "found";
      rep_.explored = 1;
      return rep_;
    }
    fwd_.emplace(start_, Back{});
    bwd_.emplace(goal_, Back{});
    std::vector<HVector> ff{start_}, fb{goal_};
    for (;;) {
      if (ff.empty() || fb.empty()) {
        rep_.outcome = "exhausted state space";
        break;
      }
      const bool forward = ff.size() <= fb.size();
      auto& frontier = forward ? ff : fb;
      auto meet = expand(frontier, forward);
      if (meet) {
        build(*meet);
        rep_.found = true;
        rep_.outcome = "found";
        break;
      }
    }
    rep_.explored = fwd_.size() + bwd_.size();
    return rep_;
  }

private:
  struct Back {
    std::optional<HVector> parent;  // toward the start (fwd) or the goal (bwd)
    std::optional<HVector> w;
    int dist = 0;
  };
  struct Meet {
    HVector a;  // on the forward side
    HVector w;
    HVector b;  // on the backward side
    int total;
  };

  HVector generic(Int m) const {
    if (cfg_.admissibility == Admissibility::on_surface)
      return generic_points_h_vector(m, cfg_.ambient, cfg_.surface_degree);
    return generic_points_h_vector(m, cfg_.ambient);
  }

  bool admissible(const HVector& r) const {
    if (r.mass() > *cfg_.max_intermediate) return false;
    if (cfg_.admissibility == Admissibility::permissive) return true;
    return r == generic(r.mass());
  }

  // forward: edges x -> y; backward: edges y -> x read in reverse
  std::vector<Edge> neighbors(const HVector& x, bool forward) const {
    std::vector<Edge> out;
    const Int mx = x.mass();
    for (const auto& w : gor_) {
      if (w.mass() - mx > *cfg_.max_intermediate) continue;
      auto y = try_link(x, w);
      if (!y || !admissible(*y)) continue;
      if (cfg_.mode == GlicciMode::descending_only) {
        const Int my = y->mass();
        if (forward ? my >= mx : my <= mx) continue;
      }
      out.push_back({w, std::move(*y)});
    }
    return out;
  }

  std::vector<std::vector<Edge>> all_neighbors(const std::vector<HVector>& frontier, bool forward) const {
    std::vector<std::vector<Edge>> out(frontier.size());
    const std::size_t workers = std::min<std::size_t>(cfg_.workers, frontier.size());
    if (workers <= 1) {
      for (std::size_t i = 0; i < frontier.size(); ++i) out[i] = neighbors(frontier[i], forward);
      return out;
    }
    const std::size_t chunk = (frontier.size() + workers - 1) / workers;
    std::vector<std::future<void>> futs;
    for (std::size_t lo = 0; lo < frontier.size(); lo += chunk) {
      const std::size_t hi = std::min(frontier.size(), lo + chunk);
      futs.push_back(std::async(std::launch::async, [&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i) out[i] = neighbors(frontier[i], forward);
      }));
    }
    for (auto& f : futs) f.get();
    return out;
  }

  std::optional<Meet> expand(std::vector<HVector>& frontier, bool forward) {
    auto& mine = forward ? fwd_ : bwd_;
    auto& other = forward ? bwd_ : fwd_;
    const auto nbrs = all_neighbors(frontier, forward);
    std::vector<HVector> next;
    std::optional<Meet> best;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const HVector& x = frontier[i];
      const int dx = mine.at(x).dist;
      for (const auto& e : nbrs[i]) {
        if (auto it = other.find(e.y); it != other.end()) {
          const int total = dx + 1 + it->second.dist;
          if (!best || total < best->total) {
            best = forward ? Meet{x, e.w, e.y, total} : Meet{e.y, e.w, x, total};
          }
        }
        if (mine.count(e.y)) continue;
        mine.emplace(e.y, Back{x, e.w, dx + 1});
        next.push_back(e.y);
      }
    }
    frontier = std::move(next);
    return best;
  }

  void build(const Meet& m) {
    std::vector<PointLink> head;
    for (HVector cur = m.a; fwd_.at(cur).parent;) {
      const auto& b = fwd_.at(cur);
      head.push_back({*b.parent, *b.w, cur});
      cur = *b.parent;
    }
    std::reverse(head.begin(), head.end());
    head.push_back({m.a, m.w, m.b});
    for (HVector cur = m.b; bwd_.at(cur).parent;) {
      const auto& b = bwd_.at(cur);
      head.push_back({cur, *b.w, *b.parent});
      cur = *b.parent;
    }
    auto& ch = rep_.chain;
    ch.links = std::move(head);
    for (std::size_t i = 0; i < ch.links.size(); ++i) {
      const auto& l = ch.links[i];
      if (l.to.mass() >= l.from.mass()) ch.monotone_descending = false;
      ch.max_linking_degree = std::max(ch.max_linking_degree, l.w.mass());
      if (i + 1 < ch.links.size()) ch.max_intermediate_degree = std::max(ch.max_intermediate_degree, l.to.mass());
    }
  }

  GlicciConfig cfg_;
  int codim_ = 3;
  HVector start_, goal_;
  std::vector<HVector> gor_;
  std::map<HVector, Back> fwd_, bwd_;
  GlicciReport rep_;
};

}  // namespace

GlicciReport glicci_chain(Int n, const GlicciConfig& config) { return GlicciSearch(n, config).run(); }

}  // namespace liaison
