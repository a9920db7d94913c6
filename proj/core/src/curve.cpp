#include "liaison/curve.hpp"

#include <algorithm>
#include <sstream>

#include "liaison/checked.hpp"
#include "liaison/error.hpp"

namespace liaison {

namespace ck = checked;
using Int = std::int64_t;

// ---------------------------------------------------------------------------
// RaoTag

RaoTag RaoTag::M(Int a, Int shift) {
  if (a < 1) throw InvalidArgument("M_a needs a >= 1");
  return {Kind::M_a, a, shift, false};
}

Int RaoTag::length() const {
  switch (kind) {
    case Kind::zero: return 0;
    case Kind::simple_k: return 1;
    case Kind::M_a: return a;
    case Kind::unknown: return 1;
  }
  return 0;
}

std::string RaoTag::kind_name() const {
  switch (kind) {
    case Kind::zero: return "zero";
    case Kind::simple_k: return "simple_k";
    case Kind::M_a: return "M_a";
    case Kind::unknown: return "unknown";
  }
  return "?";
}

std::string RaoTag::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::zero: return "0";
    case Kind::simple_k: os << "k"; break;
    case Kind::M_a: os << "M_" << a; break;
    case Kind::unknown: os << "?"; break;
  }
  if (dualized) os << "^*";
  os << " @" << shift;
  return os.str();
}

RaoTag rao_after_biliaison(const RaoTag& tag, Int h) {
  if (tag.kind == RaoTag::Kind::zero) return RaoTag::zero();
  RaoTag out = tag;
  out.shift = ck::add(tag.shift, h);
  return out;
}

RaoTag rao_after_link(const RaoTag& tag, Int t) {
  if (tag.kind == RaoTag::Kind::zero) return RaoTag::zero();
  RaoTag out = tag;
  out.shift = ck::sub(t, tag.end());
  out.dualized = !tag.dualized;
  return out;
}

// ---------------------------------------------------------------------------
// CurveRecord

CurveRecord CurveRecord::abstract(Int degree, Int genus, RaoTag rao, std::string provenance) {
  CurveRecord c;
  c.degree_ = degree;
  c.genus_ = genus;
  c.rao_ = rao.kind == RaoTag::Kind::zero ? RaoTag::zero() : rao;
  c.provenance_ = std::move(provenance);
  return c;
}

CurveRecord CurveRecord::on_surface(std::shared_ptr<const SurfaceModel> surface, DivisorClass cls,
                                    RaoTag rao, std::string provenance) {
  if (!surface) throw InvalidArgument("null surface for witness");
  surface->require_owns(cls);
  CurveRecord c;
  c.degree_ = liaison::degree(cls, *surface);
  c.genus_ = arithmetic_genus(cls, *surface);
  c.screen_failed_ = !passes_effectivity_screen(*surface, cls);
  c.witness_ = Witness{std::move(surface), std::move(cls)};
  c.rao_ = rao.kind == RaoTag::Kind::zero ? RaoTag::zero() : rao;
  c.provenance_ = std::move(provenance);
  return c;
}

const Witness& CurveRecord::require_witness() const {
  if (!witness_) {
    throw MissingWitness("curve (" + std::to_string(degree_) + "," + std::to_string(genus_) +
                         ") has no divisor-class witness");
  }
  return *witness_;
}

CurveRecord CurveRecord::with_rao(RaoTag rao) const {
  CurveRecord c = *this;
  c.rao_ = rao.kind == RaoTag::Kind::zero ? RaoTag::zero() : rao;
  return c;
}

CurveRecord CurveRecord::with_provenance(std::string p) const {
  CurveRecord c = *this;
  c.provenance_ = std::move(p);
  return c;
}

std::string CurveRecord::summary() const {
  std::ostringstream os;
  os << '(' << degree_ << ',' << genus_ << ')';
  if (witness_) os << " " << witness_->cls << " on " << witness_->surface->id();
  os << " M=" << rao_.to_string();
  return os.str();
}

bool passes_effectivity_screen(const SurfaceModel& s, const DivisorClass& c) {
  if (degree(c, s) < 1) return false;
  for (const auto& l : s.lines().classes) {
    if (l.cls != c && intersect(c, l.cls) < 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Secant profiles

std::string SecantProfile::summary_string() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& [value, count] : summary) {
    if (!first) os << ',';
    first = false;
    os << value;
    if (count != 1) os << '^' << count;
  }
  os << ')';
  return os.str();
}

SecantProfile multisecant_profile(const CurveRecord& c) {
  const auto& w = c.require_witness();
  SecantProfile p;
  for (const auto& l : w.surface->lines().classes) {
    const Int v = intersect(w.cls, l.cls);
    p.entries.push_back({l, v});
    ++p.summary[v];
  }
  return p;
}

std::vector<LineClass> k_secant_lines(const CurveRecord& c, Int k) {
  const auto& w = c.require_witness();
  std::vector<LineClass> out;
  for (const auto& l : w.surface->lines().classes) {
    if (intersect(w.cls, l.cls) == k) out.push_back(l);
  }
  return out;
}

Int plane_pencil_bound(const CurveRecord& c, const DivisorClass& conic) {
  const auto& w = c.require_witness();
  const auto& conics = w.surface->conics();
  if (std::find(conics.begin(), conics.end(), conic) == conics.end()) {
    throw InvalidArgument(conic.to_string() + " is not a conic class on " + w.surface->id());
  }
  return ck::sub(c.degree(), intersect(w.cls, conic));
}

// ---------------------------------------------------------------------------
// Unions and minimal curves

CurveRecord disjoint_union(const CurveRecord& c1, const CurveRecord& c2, RaoTag rao) {
  return CurveRecord::abstract(ck::add(c1.degree(), c2.degree()),
                               ck::sub(ck::add(c1.genus(), c2.genus()), 1), rao,
                               "disjoint union");
}

CurveRecord disjoint_union_on_surface(const CurveRecord& c1, const CurveRecord& c2, RaoTag rao) {
  const auto& w1 = c1.require_witness();
  const auto& w2 = c2.require_witness();
  if (w1.surface->id() != w2.surface->id()) {
    throw InvalidArgument("disjoint union on a surface needs both curves on the same surface");
  }
  const Int meet = intersect(w1.cls, w2.cls);
  if (meet != 0) {
    throw InvalidArgument(w1.cls.to_string() + " and " + w2.cls.to_string() + " meet in " +
                          std::to_string(meet) + " points");
  }
  return CurveRecord::on_surface(w1.surface, w1.cls + w2.cls, rao, "disjoint union");
}

CurveRecord line_curve() { return CurveRecord::abstract(1, 0, RaoTag::zero(), "line"); }

CurveRecord plane_curve(Int d) {
  if (d < 1) throw InvalidArgument("plane curve needs degree >= 1");
  return CurveRecord::abstract(d, ck::mul(d - 1, d - 2) / 2, RaoTag::zero(),
                               "plane curve of degree " + std::to_string(d));
}

CurveRecord minimal_curve_M_k(Int d) {
  if (d < 2) throw InvalidArgument("minimal curves for M = k need degree >= 2");
  return disjoint_union(line_curve(), plane_curve(d - 1), RaoTag::simple_k(0))
      .with_provenance("minimal curve for M=k, degree " + std::to_string(d));
}

LesperanceType lesperance_type_from_string(const std::string& s) {
  if (s == "a") return LesperanceType::a;
  if (s == "b") return LesperanceType::b;
  if (s == "c") return LesperanceType::c;
  if (s == "d") return LesperanceType::d;
  throw InvalidArgument("unknown minimal-curve type '" + s + "' (expected a, b, c or d)");
}

CurveRecord lesperance_curve(LesperanceType type, Int a, Int b, std::optional<Int> acm_genus) {
  if (a < 2) throw InvalidArgument("minimal curves for M_a need a >= 2");
  CurveRecord c;
  std::string name;
  switch (type) {
    case LesperanceType::a:
      c = disjoint_union(line_curve(), plane_curve(a));
      name = "type a";
      break;
    case LesperanceType::b:
      if (b < a) throw InvalidArgument("type b needs a <= b");
      c = disjoint_union(plane_curve(a), plane_curve(b));
      name = "type b";
      break;
    case LesperanceType::c:
      if (b < 1) throw InvalidArgument("type c needs b >= 1");
      c = disjoint_union(plane_curve(a), plane_curve(b));
      name = "type c";
      break;
    case LesperanceType::d:
      if (b < 1) throw InvalidArgument("type d needs the degree b >= 1 of the ACM space curve");
      if (!acm_genus) throw InvalidArgument("type d needs the genus of the ACM space curve");
      c = disjoint_union(line_curve(), CurveRecord::abstract(b, *acm_genus, RaoTag::zero(), "ACM space curve"));
      name = "type d";
      break;
  }
  if (c.degree() < a + 1) {
    throw InvalidArgument("minimal curves for M_" + std::to_string(a) + " have degree >= " +
                          std::to_string(a + 1));
  }
  return c.with_rao(RaoTag::M(a, 0))
      .with_provenance("minimal curve for M_" + std::to_string(a) + ", " + name);
}

// ---------------------------------------------------------------------------
// Modeled Hilbert function

namespace {

Int modeled_h0(const DivisorClass& d, const SurfaceModel& s) {
  if (d.is_zero()) return 1;
  if (degree(d, s) <= 0) return 0;
  return std::max<Int>(0, euler_characteristic(d, s));
}

}  // namespace

std::vector<Int> modeled_hilbert_function(const CurveRecord& c, Int n_max) {
  const auto& w = c.require_witness();
  const auto& s = *w.surface;
  std::vector<Int> phi;
  for (Int n = 0; n <= n_max; ++n) {
    const DivisorClass nh = n * s.hyperplane();
    phi.push_back(ck::sub(modeled_h0(nh, s), modeled_h0(nh - w.cls, s)));
  }
  return phi;
}

}  // namespace liaison
