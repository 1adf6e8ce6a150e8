#include <doctest.h>

#include "support.hpp"

using namespace semiconj;
using support::pi;

namespace {

  FiniteSemigroup c2() {
    return FiniteSemigroup::from_table({{0, 1}, {1, 0}});
  }

  std::vector<FiniteSemigroup> small_zoo() {
    std::vector<FiniteSemigroup> out;
    out.push_back(FiniteSemigroup::from_table({{0}}));
    out.push_back(c2());
    out.push_back(monogenic(2, 1));
    out.push_back(monogenic(3, 2));
    out.push_back(cyclic_group(6));
    out.push_back(symmetric_group(3));
    out.push_back(full_transformation_monoid(2));
    out.push_back(full_transformation_monoid(3));
    out.push_back(symmetric_inverse_monoid(2).semigroup);
    out.push_back(symmetric_inverse_monoid(3).semigroup);
    return out;
  }

}  // namespace

TEST_CASE("tables: trivial, C2 and a non-associative table") {
  auto const trivial = FiniteSemigroup::from_table({{0}});
  CHECK(trivial.order() == 1);
  CHECK(trivial.identity() == element_id{0});

  auto const g = c2();
  CHECK(g.identity() == element_id{0});

  CHECK_THROWS_AS(FiniteSemigroup::from_table({{0, 0}, {1, 0}}),
                  AssociativityViolation);
  CHECK_FALSE(oracle::associative({{0, 0}, {1, 0}}));
}

TEST_CASE("tables: malformed input is rejected") {
  CHECK_THROWS_AS(FiniteSemigroup::from_table({{0, 2}, {1, 0}}),
                  IndexOutOfRange);
  CHECK_THROWS_AS(FiniteSemigroup::from_table({{0, 1}, {1}}), IndexOutOfRange);
  CHECK_THROWS_AS(FiniteSemigroup::from_table({{0}}, {"a", "b"}), Error);
}

TEST_CASE("tables: the reported associativity witness is the least triple") {
  // Right zero on {0, 1} except 2*2 = 0: breaks associativity somewhere.
  FiniteSemigroup::table_type const bad{{0, 1, 2}, {0, 1, 2}, {0, 1, 0}};
  auto const t = oracle::Table{{0, 1, 2}, {0, 1, 2}, {0, 1, 0}};
  std::string expected;
  for (int a = 0; a < 3 && expected.empty(); ++a) {
    for (int b = 0; b < 3 && expected.empty(); ++b) {
      for (int c = 0; c < 3 && expected.empty(); ++c) {
        if (oracle::mul(t, oracle::mul(t, a, b), c)
            != oracle::mul(t, a, oracle::mul(t, b, c))) {
          expected = AssociativityViolation(static_cast<std::size_t>(a),
                                            static_cast<std::size_t>(b),
                                            static_cast<std::size_t>(c))
                         .what();
        }
      }
    }
  }
  REQUIRE_FALSE(expected.empty());
  try {
    (void)FiniteSemigroup::from_table(bad);
    FAIL("expected AssociativityViolation");
  } catch (AssociativityViolation const& e) {
    CHECK(std::string(e.what()) == expected);
  }
}

TEST_CASE("monogenic semigroups") {
  auto const s = monogenic(2, 1);
  REQUIRE(s.order() == 2);
  CHECK(s.product(0, 0) == 1);
  CHECK(s.product(0, 1) == 1);
  CHECK(s.product(1, 1) == 1);
  CHECK(s.name(0) == "x");
  CHECK(s.name(1) == "x^2");
  CHECK_FALSE(s.identity());

  CHECK(monogenic(1, 1).order() == 1);

  auto const c3 = monogenic(1, 3);
  CHECK(c3.order() == 3);
  CHECK(is_group(c3));

  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t p = 1; p <= 4; ++p) {
      auto const m = monogenic(i, p);
      CAPTURE(i);
      CAPTURE(p);
      CHECK(m.order() == i + p - 1);
      CHECK(m.power(0, i) == m.power(0, i + p));
      CHECK(oracle::associative(support::table(m)));
    }
  }
}

TEST_CASE("closure from generators") {
  auto const id2 = Transformation::identity(2);
  auto const one = closure_from_generators<Transformation>(
      {id2}, [](auto const& a, auto const& b) { return compose(a, b); });
  CHECK(one.semigroup.order() == 1);

  auto const is2 = closure_of(IS_generators(2));
  CHECK(is2.semigroup.order() == 7);

  auto const t3 = closure_from_generators<Transformation>(
      T_generators(3), [](auto const& a, auto const& b) { return compose(a, b); });
  CHECK(t3.semigroup.order() == 27);
  for (std::size_t i = 0; i < t3.elements.size(); ++i) {
    auto acc = t3.elements[t3.words[i].front()];
    for (std::size_t k = 1; k < t3.words[i].size(); ++k) {
      acc = compose(acc, T_generators(3)[t3.words[i][k]]);
    }
    CHECK(acc == t3.elements[i]);
  }

  for (long n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(static_cast<long>(closure_of(IS_generators(static_cast<std::size_t>(n)))
                                .semigroup.order())
          == oracle::count_partial_injections(n));
  }
  CHECK(oracle::count_partial_injections(3) == 34);
  CHECK(oracle::count_partial_injections(4) == 209);

  auto const tiny = [](auto const& a, auto const& b) { return compose(a, b); };
  CHECK_THROWS_AS((closure_from_generators<Transformation>(T_generators(3), tiny, 5)),
                  ClosureBudgetExceeded);
}

TEST_CASE("monoid hull") {
  auto const h = monoid_hull(monogenic(2, 1));
  CHECK(h.hull.order() == 3);
  CHECK(h.adjoined);
  CHECK(h.one == 2);
  CHECK(h.identity_first().front() == 2);

  auto const g = monoid_hull(c2());
  CHECK_FALSE(g.adjoined);
  CHECK(g.hull == c2());

  auto const is2 = symmetric_inverse_monoid(2);
  auto const h2  = monoid_hull(is2.semigroup);
  CHECK_FALSE(h2.adjoined);
  CHECK(h2.one == is2.id(PartialInjection::identity(2)));
}

TEST_CASE("Green's relations match the ideal oracle") {
  for (auto const& S : small_zoo()) {
    CAPTURE(S.order());
    auto const G = greens(S);
    auto const o = oracle::green(support::table(S));
    CHECK(support::labels(G.R) == o.R);
    CHECK(support::labels(G.L) == o.L);
    CHECK(support::labels(G.J) == o.J);
    CHECK(support::labels(G.H) == o.H);
    CHECK(support::labels(G.D) == o.D);
    CHECK(G.H == G.R.meet(G.L));
    CHECK(G.D == G.R.join(G.L));
    CHECK(G.D == G.J);

    for (auto const& d : G.d_classes) {
      CHECK(d.regular == !d.idempotents.empty());
      std::set<std::size_t> sizes;
      for (auto const& row : d.eggbox) {
        for (auto h : row) {
          sizes.insert(G.H.members(h).size());
        }
      }
      CHECK(sizes.size() == 1);
    }
    for (std::size_t h = 0; h < G.H.number_of_classes(); ++h) {
      if (!G.h_is_group[h]) {
        continue;
      }
      auto const& m = G.H.members(h);
      for (auto a : m) {
        for (auto b : m) {
          CHECK(G.H.same(S.product(a, b), a));
        }
      }
    }
  }
}

TEST_CASE("Green's relations: small examples") {
  auto const G2 = greens(c2());
  CHECK(G2.D.number_of_classes() == 1);
  CHECK(G2.H.number_of_classes() == 1);

  auto const is2 = symmetric_inverse_monoid(2);
  auto const G   = greens(is2.semigroup);
  std::multiset<std::size_t> sizes;
  for (auto const& d : G.d_classes) {
    sizes.insert(d.members.size());
  }
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 4});
  for (auto const& d : G.d_classes) {
    if (d.members.size() == 4) {
      CHECK(d.eggbox.size() == 2);
      CHECK(d.eggbox.front().size() == 2);
    }
  }

  auto const Gm = greens(monogenic(2, 1));
  REQUIRE(Gm.d_classes.size() == 2);
  CHECK_FALSE(Gm.d_classes[0].regular);
  CHECK(Gm.d_classes[1].regular);
}

TEST_CASE("power data") {
  auto const m  = monogenic(2, 1);
  auto const pd = power_data(m);
  CHECK(pd.index[0] == 2);
  CHECK(pd.period[0] == 1);
  CHECK(pd.idempotent_power[0] == 1);

  auto const is2 = symmetric_inverse_monoid(2);
  auto const p2  = power_data(is2.semigroup);
  auto const one = is2.id(PartialInjection::identity(2));
  CHECK(p2.index[one] == 1);
  CHECK(p2.period[one] == 1);
  CHECK(p2.idempotent_power[one] == one);
  auto const chain = is2.id(pi(2, {{0, 1}}));
  CHECK(p2.index[chain] == 2);
  CHECK(p2.period[chain] == 1);
  CHECK(p2.idempotent_power[chain] == is2.id(PartialInjection::empty(2)));

  for (auto const& S : small_zoo()) {
    auto const d = power_data(S);
    auto const t = support::table(S);
    for (element_id x = 0; x < S.order(); ++x) {
      auto const e = d.idempotent_power[x];
      CHECK(S.is_idempotent(e));
      CHECK(S.product(e, x) == S.product(x, e));
      CHECK(static_cast<int>(e) == oracle::idempotent_power(t, static_cast<int>(x)));
      CHECK(S.power(x, d.index[x]) == S.power(x, d.index[x] + d.period[x]));
    }
  }
}

TEST_CASE("regular and inverse semigroups") {
  auto const t3 = full_transformation_monoid(3);
  CHECK(is_regular(t3));
  CHECK_FALSE(is_inverse(t3));

  auto const is3 = symmetric_inverse_monoid(3);
  CHECK(is_regular(is3.semigroup));
  CHECK(is_inverse(is3.semigroup));
  for (std::size_t i = 0; i < is3.elements.size(); ++i) {
    auto const x = static_cast<element_id>(i);
    CHECK(unique_inverse(is3.semigroup, x) == is3.id(inverse(is3.elements[i])));
  }

  auto const m = monogenic(2, 1);
  CHECK_FALSE(is_regular(m));
  CHECK_THROWS_AS(unique_inverse(m, 0), NotInverse);

  // Oracle: regularity and inverse-ness straight from the definitions.
  for (auto const& S : small_zoo()) {
    auto const t         = support::table(S);
    bool       regular   = true;
    bool       unique    = true;
    for (int a = 0; a < static_cast<int>(t.size()); ++a) {
      auto const inv = oracle::inverses(t, a);
      regular        = regular && !inv.empty();
      unique         = unique && inv.size() == 1;
    }
    CHECK(is_regular(S) == regular);
    CHECK(is_inverse(S) == unique);
  }
}

TEST_CASE("maximal subgroups") {
  auto const is3 = symmetric_inverse_monoid(3);
  auto const H   = maximal_subgroup(is3.semigroup, is3.id(PartialInjection::identity(3)));
  CHECK(H.group.order() == 6);
  CHECK(is_group(H.group));

  auto const is2 = symmetric_inverse_monoid(2);
  CHECK(maximal_subgroup(is2.semigroup, is2.id(PartialInjection::empty(2))).group.order()
        == 1);
  auto const e0 = is2.id(PartialInjection::partial_identity(2, {0}));
  auto const H0 = maximal_subgroup(is2.semigroup, e0);
  CHECK(H0.group.order() == 1);
  CHECK(H0.to_parent == std::vector<element_id>{e0});

  CHECK_THROWS_AS(maximal_subgroup(is2.semigroup, is2.id(pi(2, {{0, 1}}))),
                  NotIdempotent);
}

TEST_CASE("natural partial order") {
  auto const is2 = symmetric_inverse_monoid(2);
  auto const one = is2.id(PartialInjection::identity(2));
  auto const e0  = is2.id(PartialInjection::partial_identity(2, {0}));
  CHECK(natural_order_geq(is2.semigroup, one, e0));
  CHECK_FALSE(natural_order_geq(is2.semigroup, e0, one));

  auto const is3 = symmetric_inverse_monoid(3);
  auto const& S  = is3.semigroup;
  auto const t   = support::table(S);
  InverseStructure const inv(S);
  for (element_id a = 0; a < S.order(); ++a) {
    CHECK(inv.geq(a, a));
    for (element_id b = 0; b < S.order(); ++b) {
      CHECK(inv.geq(a, b)
            == oracle::natural_geq(t, static_cast<int>(a), static_cast<int>(b)));
    }
  }
  auto const idem = S.idempotents();
  for (auto e : idem) {
    for (auto f : idem) {
      bool const meet = S.product(e, f) == f && S.product(f, e) == f;
      CHECK(inv.geq(e, f) == meet);
    }
  }
  CHECK_THROWS_AS(natural_order_geq(full_transformation_monoid(2), 0, 0), NotInverse);
}
