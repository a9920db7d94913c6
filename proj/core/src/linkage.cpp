#include "liaison/linkage.hpp"

#include "liaison/checked.hpp"
#include "liaison/error.hpp"

namespace liaison {

namespace ck = checked;
using Int = std::int64_t;

std::string to_string(ChainStep::Kind k) {
  switch (k) {
    case ChainStep::Kind::biliaison: return "biliaison";
    case ChainStep::Kind::g_link: return "g_link";
    case ChainStep::Kind::ci_link: return "ci_link";
    case ChainStep::Kind::rewitness: return "rewitness";
  }
  return "?";
}

std::size_t Chain::liaison_steps() const {
  std::size_t n = 0;
  for (const auto& s : steps) n += s.is_liaison_move() ? 1 : 0;
  return n;
}

bool Chain::ascending_only() const {
  for (const auto& s : steps) {
    if (s.kind == ChainStep::Kind::g_link || s.kind == ChainStep::Kind::ci_link) return false;
    if (s.kind == ChainStep::Kind::biliaison && s.h < 0) return false;
  }
  return true;
}

Int Chain::total_height() const {
  Int t = 0;
  for (const auto& s : steps)
    if (s.kind == ChainStep::Kind::biliaison) t = ck::add(t, s.h);
  return t;
}

namespace {

bool same_record(const CurveRecord& a, const CurveRecord& b) {
  if (a.degree() != b.degree() || a.genus() != b.genus() || a.rao() != b.rao()) return false;
  if (a.witness() && b.witness()) {
    return a.witness()->surface->id() == b.witness()->surface->id() &&
           a.witness()->cls == b.witness()->cls;
  }
  return true;
}

}  // namespace

void Chain::validate() const {
  const CurveRecord* prev = &start;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& st = steps[i];
    const std::string where = "chain step " + std::to_string(i) + " (" + to_string(st.kind) + ")";
    if (!same_record(*prev, st.before)) throw Error(where + ": does not continue the previous record");
    CurveRecord redo;
    switch (st.kind) {
      case ChainStep::Kind::biliaison: redo = elementary_biliaison(st.before, st.h); break;
      case ChainStep::Kind::g_link: redo = g_link_on_surface(st.before, st.h); break;
      case ChainStep::Kind::ci_link: redo = ci_link_p3(st.before, st.f1, st.f2); break;
      case ChainStep::Kind::rewitness: {
        const auto& w = st.after.require_witness();
        redo = CurveRecord::on_surface(w.surface, w.cls, st.before.rao(), "");
        if (redo.degree() != st.before.degree() || redo.genus() != st.before.genus())
          throw Error(where + ": re-witnessed class changes (d,g)");
        break;
      }
    }
    if (!same_record(redo, st.after)) throw Error(where + ": recorded result does not re-derive");
    prev = &st.after;
  }
}

std::pair<Int, Int> biliaison_invariants(Int d, Int g, Int h, const SurfaceModel& s) {
  const Int d2 = ck::add(d, ck::mul(h, s.degree()));
  const Int inner = ck::add(ck::mul(h, s.degree()), s.hyperplane_dot_canonical());
  const Int twice = ck::mul(h, inner);
  if (twice % 2 != 0) throw Error("biliaison genus update is not integral");
  const Int g2 = ck::add(ck::add(g, ck::mul(h, d)), twice / 2);
  return {d2, g2};
}

CurveRecord elementary_biliaison(const CurveRecord& c, Int h) {
  const auto& w = c.require_witness();
  const DivisorClass cls = w.cls + h * w.surface->hyperplane();
  return CurveRecord::on_surface(w.surface, cls, rao_after_biliaison(c.rao(), h),
                                 "biliaison h=" + std::to_string(h) + " on " + w.surface->id());
}

DivisorClass ag_divisor(const SurfaceModel& s, Int m) {
  return m * s.hyperplane() - s.canonical();
}

CurveRecord g_link_on_surface(const CurveRecord& c, Int m) {
  const auto& w = c.require_witness();
  const DivisorClass d = ag_divisor(*w.surface, m);
  return CurveRecord::on_surface(w.surface, d - w.cls, rao_after_link(c.rao(), m),
                                 "G-link in " + d.to_string() + " = " + std::to_string(m) +
                                     "H-K on " + w.surface->id());
}

CurveRecord ci_link_p3(const CurveRecord& c, Int f1, Int f2) {
  if (f1 < 1 || f2 < 1) throw InvalidArgument("complete intersection degrees must be positive");
  const Int d2 = ck::sub(ck::mul(f1, f2), c.degree());
  if (d2 < 0) {
    throw InvalidArgument("CI(" + std::to_string(f1) + "," + std::to_string(f2) +
                          ") cannot contain a curve of degree " + std::to_string(c.degree()));
  }
  const Int twice = ck::mul(f1 + f2 - 4, ck::sub(d2, c.degree()));
  // (f1 + f2)(f1 f2 - 2d) is always even
  const Int g2 = ck::add(c.genus(), twice / 2);
  return CurveRecord::abstract(d2, g2, rao_after_link(c.rao(), f1 + f2 - 4),
                               "CI-link (" + std::to_string(f1) + "," + std::to_string(f2) + ")");
}

Int family_dimension(const SurfaceModel& s, const DivisorClass& c) {
  s.require_owns(c);
  return ck::add(surface_family_dim(s), expected_dim_linear_system(c, s));
}

Int hilbert_dim_lower_bound(Int d, Int g) { return ck::sub(ck::add(ck::mul(5, d), 1), g); }

}  // namespace liaison
