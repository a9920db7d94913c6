#include <doctest.h>

#include "liaison/chain_search.hpp"
#include "liaison/error.hpp"
#include "liaison/linkage.hpp"

using namespace liaison;

namespace {

CurveRecord on(const char* id, DivisorClass c, RaoTag r = RaoTag::zero()) {
  return CurveRecord::on_surface(get_surface(id), std::move(c), r, "test");
}

}  // namespace

TEST_CASE("elementary biliaison") {
  const auto c = elementary_biliaison(on("cubic_scroll", DivisorClass::plane(0, {-1})), 3);
  CHECK(c.witness()->cls == DivisorClass::plane(6, {2}));
  CHECK(c.degree() == 10);
  CHECK(c.genus() == 9);
  const auto same = elementary_biliaison(on("cubic_scroll", DivisorClass::plane(7, {4})), 0);
  CHECK(same.witness()->cls == DivisorClass::plane(7, {4}));
  const auto two = on("cubic_scroll", DivisorClass::plane(2, {2}), RaoTag::simple_k(0));
  CHECK(two.degree() == 2);
  CHECK(two.genus() == -1);
  const auto up = elementary_biliaison(two, 1);
  CHECK(up.witness()->cls == DivisorClass::plane(4, {3}));
  CHECK(up.degree() == 5);
  CHECK(up.genus() == 0);
  CHECK(up.rao() == RaoTag::simple_k(1));
  CHECK_THROWS_AS(elementary_biliaison(CurveRecord::abstract(1, 0, RaoTag::zero(), ""), 1), MissingWitness);
  const auto [d, g] = biliaison_invariants(1, 0, 3, *get_surface("cubic_scroll"));
  CHECK(d == 10);
  CHECK(g == 9);
}

TEST_CASE("G-links on a surface") {
  const auto dp4 = get_surface("del_pezzo_4");
  CHECK(ag_divisor(*dp4, 1) == DivisorClass::plane(6, {2, 2, 2, 2, 2}));
  const auto e1 = on("del_pezzo_4", DivisorClass::plane(0, {-1, 0, 0, 0, 0}));
  const auto r = g_link_on_surface(e1, 1);
  CHECK(r.witness()->cls == DivisorClass::plane(6, {3, 2, 2, 2, 2}));
  CHECK(r.degree() == 7);
  CHECK(e1.degree() + r.degree() == degree(ag_divisor(*dp4, 1), *dp4));
  CHECK(r.rao().dualized == false);  // zero stays zero
  const auto k = on("cubic_scroll", DivisorClass::plane(2, {2}), RaoTag::simple_k(0));
  const auto lk = g_link_on_surface(k, 2);
  CHECK(lk.rao().shift == 2);
  CHECK(lk.rao().dualized);
}

TEST_CASE("complete-intersection links in P3") {
  const auto cubic = CurveRecord::abstract(3, 0, RaoTag::zero(), "twisted cubic");
  const auto l = ci_link_p3(cubic, 2, 2);
  CHECK(l.degree() == 1);
  CHECK(l.genus() == 0);
  const auto s = ci_link_p3(CurveRecord::abstract(2, -1, RaoTag::simple_k(0), ""), 2, 2);
  CHECK(s.degree() == 2);
  CHECK(s.genus() == -1);
  CHECK(s.rao().shift == 0);
  const auto m = ci_link_p3(CurveRecord::abstract(5, 2, RaoTag::zero(), ""), 2, 3);
  CHECK(m.degree() == 1);
  CHECK(m.genus() == 0);
  CHECK_THROWS_AS(ci_link_p3(cubic, 1, 2), InvalidArgument);
  CHECK_THROWS_AS(ci_link_p3(cubic, 0, 5), InvalidArgument);
}

TEST_CASE("dimension counts") {
  const auto dp4 = get_surface("del_pezzo_4");
  CHECK(family_dimension(*dp4, DivisorClass::plane(5, {3, 1, 1, 1, 1})) == 36);
  CHECK(family_dimension(*get_surface("cubic_scroll"), DivisorClass::plane(6, {2})) == 42);
  CHECK(family_dimension(*get_surface("bordiga_6"), DivisorClass::exceptional(10, 10)) == 36);
  CHECK(hilbert_dim_lower_bound(20, 26) == 75);
  CHECK(hilbert_dim_lower_bound(1, 0) == 2 * (5 - 2));
  CHECK(hilbert_dim_lower_bound(8, 3) == 38);
  CHECK(hilbert_dim_lower_bound(10, 9) == 42);
}

TEST_CASE("chain validation catches tampering") {
  Chain c;
  c.start = on("cubic_scroll", DivisorClass::plane(0, {-1}));
  ChainStep st;
  st.kind = ChainStep::Kind::biliaison;
  st.h = 3;
  st.before = c.start;
  st.after = elementary_biliaison(c.start, 3);
  c.steps.push_back(st);
  CHECK_NOTHROW(c.validate());
  CHECK(c.liaison_steps() == 1);
  CHECK(c.ascending_only());
  CHECK(c.total_height() == 3);
  c.steps[0].after = elementary_biliaison(c.start, 2);
  CHECK_THROWS_AS(c.validate(), Error);
  c.steps[0].after = elementary_biliaison(c.start, 3);
  c.steps[0].before = on("cubic_scroll", DivisorClass::plane(1, {1}));
  CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("ascending chain search") {
  ChainSearchConfig cfg;
  cfg.surfaces = {"cubic_scroll"};
  auto rep = ascending_chain_search(SearchTarget::invariants(10, 9), cfg);
  REQUIRE(rep.found);
  CHECK(rep.outcome == "found");
  CHECK(rep.chain.start.witness()->cls == DivisorClass::plane(0, {-1}));
  REQUIRE(rep.chain.steps.size() == 1);
  CHECK(rep.chain.steps[0].h == 3);
  CHECK(rep.chain.end().witness()->cls == DivisorClass::plane(6, {2}));
  CHECK_NOTHROW(rep.chain.validate());

  auto line = ascending_chain_search(SearchTarget::invariants(1, 0), cfg);
  REQUIRE(line.found);
  CHECK(line.chain.steps.empty());

  // the two-step route through the Bordiga surface
  ChainSearchConfig b;
  b.surfaces = {"cubic_scroll", "bordiga_6"};
  b.starts = {on("cubic_scroll", DivisorClass::plane(2, {2}), RaoTag::simple_k(0))};
  auto r11 = ascending_chain_search(SearchTarget::invariants(11, 7), b);
  REQUIRE(r11.found);
  CHECK(r11.chain.liaison_steps() == 2);
  CHECK(r11.chain.end().degree() == 11);
  CHECK(r11.chain.end().genus() == 7);
  CHECK(r11.chain.end().rao() == RaoTag::simple_k(2));
  CHECK(r11.chain.end().witness()->surface->id() == "bordiga_6");
  CHECK_NOTHROW(r11.chain.validate());

  // class targets
  const auto scroll = get_surface("cubic_scroll");
  auto rc = ascending_chain_search(SearchTarget::divisor(*scroll, DivisorClass::plane(7, {4})), cfg);
  REQUIRE(rc.found);
  CHECK(rc.chain.end().witness()->cls == DivisorClass::plane(7, {4}));
}

TEST_CASE("search failures are reported, bad input is rejected") {
  ChainSearchConfig cfg;
  cfg.surfaces = {"cubic_scroll"};
  cfg.max_steps = 2;
  const auto rep = ascending_chain_search(SearchTarget::invariants(3, 5), cfg);
  CHECK_FALSE(rep.found);
  CHECK_FALSE(rep.outcome.empty());
  CHECK(rep.bounds.max_steps == 2);
  ChainSearchConfig empty;
  CHECK_THROWS_AS(ascending_chain_search(SearchTarget::invariants(3, 0), empty), InvalidArgument);
  cfg.surfaces = {"no_such_surface"};
  CHECK_THROWS_AS(ascending_chain_search(SearchTarget::invariants(3, 0), cfg), UnknownSurface);
}
