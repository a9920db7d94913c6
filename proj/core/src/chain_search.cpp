#include "liaison/chain_search.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <tuple>

#include "liaison/error.hpp"

namespace liaison {

using Int = std::int64_t;

SearchTarget SearchTarget::divisor(const SurfaceModel& s, DivisorClass c) {
  s.require_owns(c);
  const Int d = liaison::degree(c, s);
  const Int g = arithmetic_genus(c, s);
  return {d, g, s.id(), std::move(c)};
}

bool SearchTarget::matches(const CurveRecord& c) const {
  if (c.degree() != degree || c.genus() != genus) return false;
  if (cls) {
    if (!c.witness()) return false;
    if (surface && c.witness()->surface->id() != *surface) return false;
    return c.witness()->cls == *cls;
  }
  return true;
}

namespace {

using Key = std::tuple<std::string, DivisorClass, RaoTag>;

Key key_of(const CurveRecord& c) {
  const auto& w = c.require_witness();
  return {w.surface->id(), w.cls, c.rao()};
}

struct Node {
  CurveRecord rec;
  int parent = -1;
  ChainStep::Kind kind = ChainStep::Kind::biliaison;
  Int h = 0;
};

enum class Prune { none, screen, box, degree };

struct Candidate {
  int parent;
  ChainStep::Kind kind;
  Int h;
  CurveRecord rec;
  Prune prune;
};

class Search {
public:
  Search(const SearchTarget& target, const ChainSearchConfig& cfg) : target_(target), cfg_(cfg) {
    catalog_ = cfg.catalog ? cfg.catalog : &Catalog::builtin();
    if (cfg_.surfaces.empty()) throw InvalidArgument("chain search needs at least one surface");
    if (cfg_.max_steps < 1) throw InvalidArgument("max_steps must be >= 1");
    if (cfg_.h_max < 1) throw InvalidArgument("h_max must be >= 1");
    for (const auto& id : cfg_.surfaces) allowed_.insert(catalog_->get_surface(id)->id());
    if (!cfg_.degree_cap) cfg_.degree_cap = 3 * target.degree + 10;
    if (cfg_.workers == 0) cfg_.workers = 1;
  }

  SearchReport run() {
    SearchReport rep;
    rep.bounds = cfg_;

    std::vector<int> level;
    for (auto& s : initial_records()) {
      if (visited_.insert(key_of(s)).second) {
        nodes_.push_back({std::move(s), -1, ChainStep::Kind::biliaison, 0});
        level.push_back(static_cast<int>(nodes_.size()) - 1);
      }
    }
    close_under_rewitness(level);

    for (int depth = 0;; ++depth) {
      rep.levels = depth;
      rep.frontier = level.size();
      for (int idx : level) {
        if (target_.matches(nodes_[idx].rec)) {
          rep.found = true;
          rep.chain = build_chain(idx);
          rep.outcome = "found";
          rep.explored = nodes_.size();
          finish(rep);
          return rep;
        }
      }
      if (level.empty()) {
        rep.outcome = "exhausted state space";
        break;
      }
      if (depth == cfg_.max_steps) {
        rep.outcome = "step budget exhausted";
        break;
      }
      level = expand_level(level);
      close_under_rewitness(level);
    }
    rep.explored = nodes_.size();
    finish(rep);
    return rep;
  }

private:
  void finish(SearchReport& rep) const {
    rep.pruned_screen = pruned_screen_;
    rep.pruned_box = pruned_box_;
    rep.pruned_degree = pruned_degree_;
    rep.pruning_log = log_;
  }

  std::vector<CurveRecord> initial_records() const {
    std::vector<CurveRecord> out;
    if (!cfg_.starts.empty()) {
      for (const auto& s : cfg_.starts) {
        const auto& w = s.require_witness();
        if (!allowed_.count(w.surface->id())) {
          throw InvalidArgument("start record lives on " + w.surface->id() +
                                ", which is not among the allowed surfaces");
        }
        out.push_back(s);
      }
      return out;
    }
    for (const auto& id : cfg_.surfaces) {
      auto s = catalog_->get_surface(id);
      for (const auto& l : s->lines().classes) {
        out.push_back(CurveRecord::on_surface(s, l.cls, RaoTag::zero(), "line on " + s->id()));
      }
    }
    return out;
  }

  Prune classify(const CurveRecord& r) const {
    const auto& w = *r.witness();
    if (w.cls.max_abs() > cfg_.coeff_bound) return Prune::box;
    if (cfg_.ascending_only) {
      if (r.degree() > target_.degree) return Prune::degree;
    } else if (r.degree() > *cfg_.degree_cap) {
      return Prune::degree;
    }
    if (r.screen_failed()) return Prune::screen;
    return Prune::none;
  }

  std::vector<Candidate> expand_node(int idx) const {
    std::vector<Candidate> out;
    const CurveRecord& rec = nodes_[idx].rec;
    auto push = [&](ChainStep::Kind kind, Int h, CurveRecord r) {
      const Prune p = classify(r);
      out.push_back({idx, kind, h, std::move(r), p});
    };
    if (cfg_.ascending_only) {
      for (Int h = 1; h <= cfg_.h_max; ++h) push(ChainStep::Kind::biliaison, h, elementary_biliaison(rec, h));
    } else {
      for (Int h = -cfg_.h_max; h <= cfg_.h_max; ++h) {
        if (h != 0) push(ChainStep::Kind::biliaison, h, elementary_biliaison(rec, h));
      }
      for (Int m = 0; m <= cfg_.h_max; ++m) push(ChainStep::Kind::g_link, m, g_link_on_surface(rec, m));
    }
    return out;
  }

  std::vector<int> expand_level(const std::vector<int>& level) {
    std::vector<std::vector<Candidate>> parts;
    const unsigned workers = std::min<unsigned>(cfg_.workers, std::max<std::size_t>(1, level.size()));
    if (workers <= 1) {
      parts.emplace_back();
      for (int idx : level) {
        auto c = expand_node(idx);
        parts.back().insert(parts.back().end(), std::make_move_iterator(c.begin()),
                            std::make_move_iterator(c.end()));
      }
    } else {
      // contiguous chunks, merged in chunk order: identical to the serial order
      std::vector<std::future<std::vector<Candidate>>> futs;
      const std::size_t chunk = (level.size() + workers - 1) / workers;
      for (std::size_t lo = 0; lo < level.size(); lo += chunk) {
        const std::size_t hi = std::min(level.size(), lo + chunk);
        futs.push_back(std::async(std::launch::async, [this, &level, lo, hi] {
          std::vector<Candidate> acc;
          for (std::size_t i = lo; i < hi; ++i) {
            auto c = expand_node(level[i]);
            acc.insert(acc.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
          }
          return acc;
        }));
      }
      for (auto& f : futs) parts.push_back(f.get());
    }

    std::vector<int> next;
    for (auto& part : parts) {
      for (auto& c : part) {
        if (c.prune != Prune::none) {
          note_pruned(c);
          continue;
        }
        if (!visited_.insert(key_of(c.rec)).second) continue;
        nodes_.push_back({std::move(c.rec), c.parent, c.kind, c.h});
        next.push_back(static_cast<int>(nodes_.size()) - 1);
      }
    }
    return next;
  }

  void note_pruned(const Candidate& c) {
    switch (c.prune) {
      case Prune::screen: ++pruned_screen_; break;
      case Prune::box: ++pruned_box_; break;
      case Prune::degree: ++pruned_degree_; break;
      case Prune::none: return;
    }
    if (log_.size() < 16 && c.prune == Prune::screen) {
      log_.push_back(c.rec.witness()->cls.to_string() + " on " + c.rec.witness()->surface->id() +
                     " fails the effectivity screen");
    }
  }

  void close_under_rewitness(std::vector<int>& level) {
    for (std::size_t i = 0; i < level.size(); ++i) {
      const int idx = level[i];
      for (const auto& r : catalog_->reembeddings()) {
        const CurveRecord& rec = nodes_[idx].rec;
        const auto& from = rec.witness()->surface->id();
        if (r.degree != rec.degree() || r.genus != rec.genus()) continue;
        if (r.rao_kind != rec.rao().kind_name()) continue;
        if (r.from_surface && *r.from_surface != from) continue;
        if (r.to_surface == from || !allowed_.count(r.to_surface)) continue;
        auto moved = CurveRecord::on_surface(catalog_->get_surface(r.to_surface), r.cls, rec.rao(),
                                             "re-embedded: " + r.note);
        if (!visited_.insert(key_of(moved)).second) continue;
        nodes_.push_back({std::move(moved), idx, ChainStep::Kind::rewitness, 0});
        level.push_back(static_cast<int>(nodes_.size()) - 1);
      }
    }
  }

  Chain build_chain(int idx) const {
    std::vector<int> path;
    for (int i = idx; i >= 0; i = nodes_[i].parent) path.push_back(i);
    std::reverse(path.begin(), path.end());
    Chain chain;
    chain.start = nodes_[path.front()].rec;
    for (std::size_t k = 1; k < path.size(); ++k) {
      const Node& n = nodes_[path[k]];
      ChainStep st;
      st.kind = n.kind;
      st.h = n.h;
      st.before = nodes_[path[k - 1]].rec;
      st.after = n.rec;
      st.note = n.rec.provenance();
      chain.steps.push_back(std::move(st));
    }
    return chain;
  }

  SearchTarget target_;
  ChainSearchConfig cfg_;
  const Catalog* catalog_ = nullptr;
  std::set<std::string> allowed_;
  std::vector<Node> nodes_;
  std::set<Key> visited_;
  std::size_t pruned_screen_ = 0, pruned_box_ = 0, pruned_degree_ = 0;
  std::vector<std::string> log_;
};

}  // namespace

SearchReport ascending_chain_search(const SearchTarget& target, const ChainSearchConfig& config) {
  return Search(target, config).run();
}

}  // namespace liaison
