#include <doctest.h>

#include <set>
#include <string>

#include "../support/oracles.hpp"
#include "liaison/error.hpp"
#include "liaison/surface.hpp"

using namespace liaison;

namespace {

std::vector<std::int64_t> v(const DivisorClass& c) { return {c.coeffs().begin(), c.coeffs().end()}; }

oracle::Lattice lat(const SurfaceModel& s) {
  return {s.basis().kind == BasisTag::Kind::quadric, v(s.hyperplane()), v(s.canonical())};
}

std::set<std::vector<std::int64_t>> library_lines(const SurfaceModel& s) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& l : s.lines().classes) out.insert(v(l.cls));
  return out;
}

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("catalog lookups") {
  const auto scroll = get_surface("cubic_scroll");
  CHECK(scroll->basis() == BasisTag::blownup_plane(1));
  CHECK(scroll->hyperplane() == DivisorClass::plane(2, {1}));
  CHECK(scroll->degree() == 3);
  const auto bordiga = get_surface("bordiga_6");
  CHECK(bordiga->basis().points == 10);
  CHECK(bordiga->hyperplane() == DivisorClass::plane(4, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK(bordiga->degree() == 6);
  const auto dp4 = get_surface("del_pezzo_4");
  CHECK(dp4->basis().points == 5);
  CHECK(dp4->degree() == 4);
  CHECK(dp4->sectional_genus() == 1);
  // oracle: recompute H^2 and (H^2 + HK)/2 + 1 by hand
  const auto L = lat(*dp4);
  CHECK(L.dot(L.h, L.h) == 4);
  CHECK((L.dot(L.h, L.h) + L.dot(L.h, L.k)) / 2 + 1 == 1);
  for (const auto& id : Catalog::builtin().surface_ids()) {
    const auto s = get_surface(id);
    const auto l = lat(*s);
    CHECK(l.dot(l.h, l.h) == s->degree());
    CHECK((l.dot(l.h, l.h) + l.dot(l.h, l.k)) / 2 + 1 == s->sectional_genus());
  }
  CHECK(Catalog::builtin().surface_ids().size() == 7);
}

TEST_CASE("unknown surface lists the valid ids") {
  try {
    get_surface("nope");
    FAIL("no exception");
  } catch (const UnknownSurface& e) {
    const std::string what = e.what();
    CHECK(what.find("cubic_scroll") != std::string::npos);
    CHECK(what.find("bordiga_6") != std::string::npos);
  }
}

TEST_CASE("line classes on the scroll and the quartic del Pezzo") {
  const auto scroll = get_surface("cubic_scroll");
  REQUIRE(scroll->lines().size() == 2);
  CHECK(scroll->lines().classes[0] == LineClass{DivisorClass::plane(0, {-1}), FamilyFlag::finite});
  CHECK(scroll->lines().classes[1] == LineClass{DivisorClass::plane(1, {1}), FamilyFlag::one_parameter});
  const auto dp4 = get_surface("del_pezzo_4");
  const auto& ls = dp4->lines();
  CHECK(ls.size() == 16);
  int exc = 0, through_two = 0, conic_type = 0;
  for (const auto& l : ls.classes) {
    CHECK(l.family == FamilyFlag::finite);
    if (l.cls[0] == 0) ++exc;
    if (l.cls[0] == 1) ++through_two;
    if (l.cls[0] == 2) ++conic_type;
  }
  CHECK(exc == 5);
  CHECK(through_two == 10);
  CHECK(conic_type == 1);
  CHECK(ls.contains(DivisorClass::plane(2, {1, 1, 1, 1, 1})));
  CHECK(lines_on(*dp4).classes == ls.classes);
}

TEST_CASE("line enumeration matches brute-force box search") {
  struct Box {
    const char* id;
    std::int64_t a_max, lo, hi;
    std::size_t count;
  };
  for (const Box& b : {Box{"cubic_scroll", 6, -6, 6, 2}, Box{"del_pezzo_4", 3, -3, 3, 16},
                       Box{"cubic_surface_p3", 3, -3, 3, 27}, Box{"castelnuovo_5", 3, -1, 2, 14},
                       Box{"bordiga_6", 3, -1, 2, 10}, Box{"quadric_p3", 0, -6, 6, 2}}) {
    CAPTURE(b.id);
    const auto s = get_surface(b.id);
    const auto brute = oracle::box_lines(lat(*s), b.a_max, b.lo, b.hi);
    CHECK(brute.size() == b.count);
    CHECK(library_lines(*s) == brute);
  }
}

TEST_CASE("conic classes") {
  const auto scroll = get_surface("cubic_scroll");
  const auto& sc = scroll->conics();
  CHECK(std::find(sc.begin(), sc.end(), DivisorClass::plane(1, {0})) != sc.end());
  const auto dp4 = get_surface("del_pezzo_4");
  const auto& dc = dp4->conics();
  CHECK(dc.size() == 10);
  CHECK(std::find(dc.begin(), dc.end(), DivisorClass::plane(1, {1, 0, 0, 0, 0})) != dc.end());
  CHECK(std::find(dc.begin(), dc.end(), DivisorClass::plane(2, {0, 1, 1, 1, 1})) != dc.end());
  CHECK(intersect(DivisorClass::plane(1, {1, 0, 0, 0, 0}), DivisorClass::plane(1, {0, 1, 0, 0, 0})) == 1);
  // the two pencils (l - e_i) and (2l - sum_{j != i} e_j) are disjoint from themselves
  for (int i = 0; i < 5; ++i) {
    std::vector<std::int64_t> b(5, 0);
    b[static_cast<std::size_t>(i)] = 1;
    const DivisorClass ci(BasisTag::blownup_plane(5), {1, b[0], b[1], b[2], b[3], b[4]});
    CHECK(self_intersection(ci) == 0);
  }
  for (const auto& c : dc) {
    CHECK(degree(c, *dp4) == 2);
    CHECK(arithmetic_genus(c, *dp4) == 0);
  }
  CHECK(conic_classes(*dp4) == dc);
}

TEST_CASE("surface family dimensions") {
  CHECK(surface_family_dim(*get_surface("cubic_scroll")) == 18);
  CHECK(surface_family_dim(*get_surface("del_pezzo_4")) == 2 * (15 - 2));
  CHECK(surface_family_dim(*get_surface("bordiga_6")) == 36);
  CHECK_THROWS_AS(surface_family_dim(*get_surface("quadric_p3")), InvalidArgument);
  CHECK_THROWS_AS(surface_family_dim(*get_surface("plane_p2")), InvalidArgument);
}

TEST_CASE("class enumeration matches brute force") {
  const auto dp4 = get_surface("del_pezzo_4");
  const auto L = lat(*dp4);
  struct Q {
    std::int64_t d, self, canon;
  };
  for (const Q q : {Q{8, 12, -8}, Q{8, 8, -8}, Q{6, 4, -6}, Q{3, 1, -3}}) {
    std::set<std::vector<std::int64_t>> brute;
    std::vector<std::int64_t> c(6);
    for (c[0] = -2; c[0] <= 10; ++c[0])
      for (c[1] = -7; c[1] <= 7; ++c[1])
        for (c[2] = -7; c[2] <= 7; ++c[2])
          for (c[3] = -7; c[3] <= 7; ++c[3])
            for (c[4] = -7; c[4] <= 7; ++c[4])
              for (c[5] = -7; c[5] <= 7; ++c[5])
                if (L.dot(c, L.h) == q.d && L.dot(c, c) == q.self && L.dot(c, L.k) == q.canon) brute.insert(c);
    std::set<std::vector<std::int64_t>> lib;
    for (const auto& x : enumerate_classes(*dp4, q.d, q.self, q.canon)) lib.insert(v(x));
    CAPTURE(q.d);
    CAPTURE(q.self);
    CHECK(lib == brute);
  }
  CHECK(enumerate_classes(*dp4, 2, 5, -2).empty());  // Hodge index: 4 < 4*5
  CHECK_FALSE(class_search_a_range(*dp4, 2, 5).has_value());
}

TEST_CASE("catalog validation") {
  const std::string text(builtin_catalog_text());
  CHECK_NOTHROW(Catalog::from_json_text(text));
  CHECK_THROWS_AS(Catalog::from_json_text("{"), CatalogError);
  CHECK_THROWS_AS(Catalog::from_json_text(replace_once(text, "\"degree\": 3", "\"degree\": 5")), CatalogError);
  CHECK_THROWS_AS(Catalog::from_json_text(replace_once(text, "\"schema_version\": 1", "\"schema_version\": 9")),
                  CatalogError);
  CHECK_THROWS_AS(Catalog::from_json_text(replace_once(text, "\"K\": [-3, -1],", "\"K\": [-3, 1],")), CatalogError);
  CHECK_THROWS_AS(Catalog::load("/nonexistent/catalog.json"), CatalogError);
  CHECK_FALSE(Catalog::builtin().reembeddings().empty());
}
