#include "liaison/surface.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "liaison/checked.hpp"
#include "liaison/error.hpp"

namespace liaison {

namespace ck = checked;
using json = nlohmann::json;
using Int = std::int64_t;

std::string to_string(Ambient a) {
  switch (a) {
    case Ambient::P2: return "P2";
    case Ambient::P3: return "P3";
    case Ambient::P4: return "P4";
  }
  return "?";
}

Ambient ambient_from_string(std::string_view s) {
  if (s == "P2" || s == "p2") return Ambient::P2;
  if (s == "P3" || s == "p3") return Ambient::P3;
  if (s == "P4" || s == "p4") return Ambient::P4;
  throw InvalidArgument("unknown ambient space '" + std::string(s) + "'");
}

std::string to_string(FamilyFlag f) {
  return f == FamilyFlag::finite ? "finite" : "one_parameter";
}

bool LineClassSet::contains(const DivisorClass& c) const {
  return std::any_of(classes.begin(), classes.end(),
                     [&](const LineClass& l) { return l.cls == c; });
}

// ---------------------------------------------------------------------------
// SurfaceModel

SurfaceModel::SurfaceModel(Spec spec) : spec_(std::move(spec)) {
  const auto fail = [&](const std::string& msg) {
    throw CatalogError("surface '" + spec_.id + "': " + msg);
  };
  if (spec_.id.empty()) throw CatalogError("surface with empty id");
  if (spec_.hyperplane.basis() != spec_.basis) fail("H is not in the surface lattice");
  if (spec_.canonical.basis() != spec_.basis) fail("K is not in the surface lattice");
  if (spec_.canonical != standard_canonical(spec_.basis)) {
    fail("K must be " + standard_canonical(spec_.basis).to_string() + ", got " +
         spec_.canonical.to_string());
  }
  const Int h2 = self_intersection(spec_.hyperplane);
  if (h2 <= 0) fail("H^2 must be positive");
  if (h2 != spec_.degree) {
    fail("degree " + std::to_string(spec_.degree) + " != H^2 = " + std::to_string(h2));
  }
  hk_ = intersect(spec_.hyperplane, spec_.canonical);
  if ((h2 + hk_) % 2 != 0) fail("H^2 + H.K is odd");
  const Int pg = (h2 + hk_) / 2 + 1;
  if (pg != spec_.sectional_genus) {
    fail("sectional genus " + std::to_string(spec_.sectional_genus) +
         " != (H^2 + H.K)/2 + 1 = " + std::to_string(pg));
  }
  for (const auto& sc : spec_.special_classes) {
    if (sc.cls.basis() != spec_.basis) fail("special class " + sc.cls.to_string() + " not in lattice");
  }
  lines_ = lines_on(*this);
  conics_ = conic_classes(*this);
}

void SurfaceModel::require_owns(const DivisorClass& c) const {
  if (!owns(c)) {
    throw BasisMismatch("class " + c.to_string() + " (" + c.basis().to_string() +
                        ") is not on surface " + spec_.id + " (" + spec_.basis.to_string() + ")");
  }
}

// ---------------------------------------------------------------------------
// Class enumeration

namespace {

Int isqrt(Int x) {
  if (x <= 0) return 0;
  auto r = static_cast<Int>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

struct CoeffSearch {
  std::span<const Int> hw;      // h' weights
  std::span<const Int> kw;      // k' weights
  std::vector<Int> h_tail_sq;   // sum of h'^2 over suffixes
  std::vector<Int> k_tail_sq;
  std::vector<Int> cur;
  Int a = 0;
  std::vector<std::vector<Int>>* out = nullptr;

  // Remaining: squared norm r, weighted sums t (by h') and u (by k').
  void run(std::size_t j, Int r, Int t, Int u) {
    const std::size_t n = hw.size();
    if (j == n) {
      if (r == 0 && t == 0 && u == 0) out->push_back(cur);
      return;
    }
    if (r < 0) return;
    // Cauchy-Schwarz on the remaining coordinates.
    if (ck::mul(t, t) > ck::mul(r, h_tail_sq[j])) return;
    if (ck::mul(u, u) > ck::mul(r, k_tail_sq[j])) return;
    const Int lim = isqrt(r);
    for (Int b = -lim; b <= lim; ++b) {
      cur[j] = b;
      run(j + 1, r - b * b, t - b * hw[j], u - b * kw[j]);
    }
  }
};

}  // namespace

std::optional<std::pair<Int, Int>> class_search_a_range(const SurfaceModel& s, Int deg, Int self) {
  const auto h = s.hyperplane().coeffs();
  if (s.basis().kind != BasisTag::Kind::blownup_plane) {
    throw InvalidArgument("class_search_a_range applies to blown-up planes");
  }
  const Int d_h = s.degree();
  const Int disc = ck::sub(ck::mul(deg, deg), ck::mul(d_h, self));
  if (disc < 0) return std::nullopt;
  Int hp_sq = 0;
  for (std::size_t i = 1; i < h.size(); ++i) hp_sq = ck::add(hp_sq, ck::mul(h[i], h[i]));
  const long double hp = std::sqrt(static_cast<long double>(hp_sq));
  const long double root = std::sqrt(static_cast<long double>(disc));
  const long double center = static_cast<long double>(h[0]) * static_cast<long double>(deg);
  const long double lo = (center - hp * root) / static_cast<long double>(d_h);
  const long double hi = (center + hp * root) / static_cast<long double>(d_h);
  // widen by one to absorb rounding; the inner search is exact
  return std::pair<Int, Int>{static_cast<Int>(std::floor(lo)) - 1,
                             static_cast<Int>(std::ceil(hi)) + 1};
}

std::vector<DivisorClass> enumerate_classes(const SurfaceModel& s, Int deg, Int self,
                                            Int canon_deg) {
  std::vector<DivisorClass> result;
  const auto& H = s.hyperplane();
  const auto& K = s.canonical();

  if (s.basis().kind == BasisTag::Kind::quadric) {
    const Int p = H[0], q = H[1];
    const Int bound = std::abs(deg) + (std::abs(p) + std::abs(q)) * (std::abs(self) + 1) + 1;
    for (Int a = -bound; a <= bound; ++a) {
      for (Int b = -bound; b <= bound; ++b) {
        auto c = DivisorClass::quadric(a, b);
        if (intersect(c, H) == deg && intersect(c, c) == self && intersect(c, K) == canon_deg)
          result.push_back(std::move(c));
      }
    }
    return result;
  }

  const auto range = class_search_a_range(s, deg, self);
  if (!range) return result;
  const auto hc = H.coeffs();
  const auto kc = K.coeffs();
  const std::size_t n = hc.size() - 1;

  CoeffSearch search;
  search.hw = hc.subspan(1);
  search.kw = kc.subspan(1);
  search.h_tail_sq.assign(n + 1, 0);
  search.k_tail_sq.assign(n + 1, 0);
  for (std::size_t j = n; j-- > 0;) {
    search.h_tail_sq[j] = search.h_tail_sq[j + 1] + search.hw[j] * search.hw[j];
    search.k_tail_sq[j] = search.k_tail_sq[j + 1] + search.kw[j] * search.kw[j];
  }
  search.cur.assign(n, 0);

  std::vector<std::vector<Int>> tails;
  for (Int a = range->first; a <= range->second; ++a) {
    const Int r = ck::sub(ck::mul(a, a), self);
    if (r < 0) continue;
    tails.clear();
    search.out = &tails;
    search.a = a;
    // C.H = a*h0 - sum bi*hi  =>  sum bi*hi = a*h0 - deg
    const Int t = ck::sub(ck::mul(a, hc[0]), deg);
    const Int u = ck::sub(ck::mul(a, kc[0]), canon_deg);
    search.run(0, r, t, u);
    for (const auto& tail : tails) result.push_back(DivisorClass::plane(a, tail));
  }
  std::sort(result.begin(), result.end());
  return result;
}

LineClassSet lines_on(const SurfaceModel& s) {
  LineClassSet set;
  for (Int self : {Int{-1}, Int{0}}) {
    for (auto& c : enumerate_classes(s, 1, self, -2 - self)) {
      set.classes.push_back({std::move(c), self == 0 ? FamilyFlag::one_parameter : FamilyFlag::finite});
    }
  }
  std::sort(set.classes.begin(), set.classes.end(),
            [](const LineClass& x, const LineClass& y) { return x.cls < y.cls; });
  return set;
}

std::vector<DivisorClass> conic_classes(const SurfaceModel& s) {
  std::vector<DivisorClass> out;
  const Int max_self = 4 / s.degree();
  for (Int self = 0; self <= max_self; ++self) {
    auto part = enumerate_classes(s, 2, self, -2 - self);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int surface_family_dim(const SurfaceModel& s) {
  if (s.ambient() != Ambient::P4) {
    throw InvalidArgument("family dimension is defined for surfaces in P4; '" + s.id() +
                          "' lives in " + to_string(s.ambient()));
  }
  if (s.stored_family_dim()) return *s.stored_family_dim();
  if (s.basis().kind != BasisTag::Kind::blownup_plane) {
    throw InvalidArgument("no family dimension stored for '" + s.id() + "'");
  }
  // positions of n points modulo PGL(3), plus the choice of coordinates on P4
  return 2 * static_cast<Int>(s.basis().points) - 8 + 24;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

DivisorClass class_from_json(const json& j, BasisTag basis, const std::string& where) {
  if (!j.is_array()) throw CatalogError(where + ": class must be an integer array");
  std::vector<Int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw CatalogError(where + ": class entries must be integers");
    v.push_back(x.get<Int>());
  }
  if (v.size() != basis.rank()) {
    throw CatalogError(where + ": class has " + std::to_string(v.size()) + " entries, lattice " +
                       basis.to_string() + " needs " + std::to_string(basis.rank()));
  }
  return DivisorClass(basis, std::move(v));
}

template <class T>
T required(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw CatalogError(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw CatalogError(where + ": field '" + key + "' has the wrong type");
  }
}

}  // namespace

Catalog Catalog::from_json_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw CatalogError(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw CatalogError("catalog root must be an object");
  const int version = required<int>(doc, "schema_version", "catalog");
  if (version != kSchemaVersion) {
    throw CatalogError("unsupported catalog schema_version " + std::to_string(version));
  }

  Catalog cat;
  if (!doc.contains("surfaces") || !doc["surfaces"].is_array())
    throw CatalogError("catalog: 'surfaces' must be an array");
  for (const auto& js : doc["surfaces"]) {
    SurfaceModel::Spec spec;
    spec.id = required<std::string>(js, "id", "surface");
    const std::string where = "surface '" + spec.id + "'";
    try {
      spec.ambient = ambient_from_string(required<std::string>(js, "ambient", where));
    } catch (const InvalidArgument& e) {
      throw CatalogError(where + ": " + e.what());
    }
    if (!js.contains("lattice")) throw CatalogError(where + ": missing field 'lattice'");
    const auto& jl = js["lattice"];
    const auto kind = required<std::string>(jl, "kind", where);
    if (kind == "blownup_plane") {
      const int n = required<int>(jl, "points", where);
      if (n < 0) throw CatalogError(where + ": negative point count");
      spec.basis = BasisTag::blownup_plane(n);
    } else if (kind == "quadric") {
      spec.basis = BasisTag::quadric();
    } else {
      throw CatalogError(where + ": unknown lattice kind '" + kind + "'");
    }
    if (!js.contains("H") || !js.contains("K")) throw CatalogError(where + ": missing H or K");
    spec.hyperplane = class_from_json(js["H"], spec.basis, where + " H");
    spec.canonical = class_from_json(js["K"], spec.basis, where + " K");
    spec.degree = required<Int>(js, "degree", where);
    spec.sectional_genus = required<Int>(js, "sectional_genus", where);
    if (js.contains("family_dim") && !js["family_dim"].is_null())
      spec.family_dim = required<Int>(js, "family_dim", where);
    if (js.contains("special_position_notes"))
      spec.special_position_notes = required<std::vector<std::string>>(js, "special_position_notes", where);
    if (js.contains("special_classes")) {
      for (const auto& sc : js["special_classes"]) {
        spec.special_classes.push_back(
            {class_from_json(sc.at("class"), spec.basis, where + " special class"),
             required<std::string>(sc, "note", where)});
      }
    }
    if (cat.surfaces_.count(spec.id)) throw CatalogError("duplicate surface id '" + spec.id + "'");
    auto id = spec.id;
    cat.surfaces_.emplace(id, std::make_shared<const SurfaceModel>(std::move(spec)));
    cat.order_.push_back(id);
  }

  if (doc.contains("reembeddings")) {
    for (const auto& jr : doc["reembeddings"]) {
      Reembedding r;
      r.degree = required<Int>(jr, "degree", "reembedding");
      r.genus = required<Int>(jr, "genus", "reembedding");
      r.rao_kind = required<std::string>(jr, "rao", "reembedding");
      r.to_surface = required<std::string>(jr, "to_surface", "reembedding");
      const std::string where = "reembedding (" + std::to_string(r.degree) + "," +
                                std::to_string(r.genus) + ") -> " + r.to_surface;
      if (r.rao_kind != "zero" && r.rao_kind != "simple_k" && r.rao_kind != "M_a" &&
          r.rao_kind != "unknown")
        throw CatalogError(where + ": unknown rao kind '" + r.rao_kind + "'");
      if (jr.contains("from_surface")) {
        r.from_surface = required<std::string>(jr, "from_surface", where);
        if (!cat.surfaces_.count(*r.from_surface))
          throw CatalogError(where + ": unknown from_surface '" + *r.from_surface + "'");
      }
      auto it = cat.surfaces_.find(r.to_surface);
      if (it == cat.surfaces_.end()) throw CatalogError(where + ": unknown to_surface");
      r.cls = class_from_json(jr.at("class"), it->second->basis(), where);
      if (degree(r.cls, *it->second) != r.degree || arithmetic_genus(r.cls, *it->second) != r.genus) {
        throw CatalogError(where + ": class " + r.cls.to_string() + " has (d,g) = (" +
                           std::to_string(degree(r.cls, *it->second)) + "," +
                           std::to_string(arithmetic_genus(r.cls, *it->second)) + ")");
      }
      r.note = jr.value("note", "");
      cat.reembeddings_.push_back(std::move(r));
    }
  }
  return cat;
}

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = from_json_text(builtin_catalog_text());
  return cat;
}

std::shared_ptr<const SurfaceModel> Catalog::get_surface(std::string_view id) const {
  auto it = surfaces_.find(id);
  if (it == surfaces_.end()) {
    std::string valid;
    for (const auto& s : order_) valid += (valid.empty() ? "" : ", ") + s;
    throw UnknownSurface("unknown surface '" + std::string(id) + "'; valid ids: " + valid);
  }
  return it->second;
}

bool Catalog::has_surface(std::string_view id) const { return surfaces_.find(id) != surfaces_.end(); }

std::vector<std::string> Catalog::surface_ids() const { return order_; }

std::shared_ptr<const SurfaceModel> get_surface(std::string_view id) {
  return Catalog::builtin().get_surface(id);
}

}  // namespace liaison
