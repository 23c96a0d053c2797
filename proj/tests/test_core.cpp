#include <doctest.h>

#include "crglobal/error.hpp"
#include "crglobal/green.hpp"
#include "crglobal/table.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace crglobal;

namespace {
  using fixtures::error_of;

  CayleyTable const L2  = validate_table({{0, 0}, {1, 1}});
  CayleyTable const R2  = validate_table({{0, 1}, {0, 1}});
  CayleyTable const Z2  = validate_table({{0, 1}, {1, 0}});
  CayleyTable const C3  = validate_table({{0, 1, 2}, {1, 0, 2}, {2, 2, 2}});  // e, a, z
  CayleyTable const RB  = validate_table({{0, 1, 0, 1}, {0, 1, 0, 1}, {2, 3, 2, 3}, {2, 3, 2, 3}});
  CayleyTable const N2  = validate_table({{0, 0}, {0, 0}});
  CayleyTable const SL2 = validate_table({{0, 0}, {0, 1}});  // min semilattice
}  // namespace

TEST_CASE("validate_table accepts and rejects") {
  CHECK(validate_table({{0}}).order() == 1);
  CHECK(L2.order() == 2);
  CHECK(error_of([] { validate_table({{0, 1}, {1, 1}, {0}}); }) == error_kind::out_of_range);
  CHECK(error_of([] { validate_table({{0, 1}, {1}}); }) == error_kind::out_of_range);
  CHECK(error_of([] { validate_table({{0, 2}, {1, 1}}); }) == error_kind::out_of_range);
  CHECK(error_of([] { validate_table({{0, -1}, {1, 1}}); }) == error_kind::out_of_range);
  CHECK(error_of([] { validate_table({}); }) == error_kind::out_of_range);
  CHECK(error_of([] { validate_table({{0, 0}, {1, 1}}, {"a"}); }) == error_kind::out_of_range);
}

TEST_CASE("the first non-associative triple matches the oracle") {
  // Every 2x2 table: associativity and the first failing triple agree.
  for (int code = 0; code < 16; ++code) {
    std::vector<std::vector<long long>> grid{{code & 1, (code >> 1) & 1}, {(code >> 2) & 1, (code >> 3) & 1}};
    oracle::Table t{{code & 1, (code >> 1) & 1}, {(code >> 2) & 1, (code >> 3) & 1}};
    auto const    bad = oracle::first_bad_triple(t);
    std::vector<elem_t> data{elem_t(code & 1), elem_t((code >> 1) & 1), elem_t((code >> 2) & 1), elem_t((code >> 3) & 1)};
    auto const mine = first_nonassociative_triple(2, data);
    REQUIRE(bad.has_value() == mine.has_value());
    if (bad) {
      CHECK((*mine)[0] == (*bad)[0]);
      CHECK((*mine)[1] == (*bad)[1]);
      CHECK((*mine)[2] == (*bad)[2]);
      CHECK(error_of([&] { validate_table(grid); }) == error_kind::not_associative);
    } else {
      CHECK(validate_table(grid).order() == 2);
    }
  }
}

TEST_CASE("subtable and relabel") {
  CayleyTable const sub = subtable(C3, {0, 1});
  CHECK(sub == Z2);
  CHECK(error_of([] { subtable(C3, {1}); }) == error_kind::not_subsemigroup);
  CayleyTable const r = relabel(C3, {2, 0, 1});
  CHECK(oracle::isomorphism(oracle::table_of(C3), oracle::table_of(r), {2, 0, 1}));
}

TEST_CASE("left zero, right zero, commutative, band") {
  CHECK(is_left_zero(L2));
  CHECK_FALSE(is_right_zero(L2));
  CHECK(is_right_zero(R2));
  CHECK_FALSE(is_left_zero(Z2));
  CHECK_FALSE(is_right_zero(Z2));
  CHECK(is_commutative(Z2));
  CHECK(is_band(RB));
  CHECK_FALSE(is_band(Z2));
}

TEST_CASE("green_relations examples") {
  GreenData const l = green_relations(L2);
  CHECK(l.number_of_d_classes() == 1);
  CHECK(l.number_of_l_classes() == 1);
  CHECK(l.number_of_r_classes() == 2);
  CHECK(l.number_of_h_classes() == 2);

  GreenData const z = green_relations(Z2);
  CHECK(z.number_of_h_classes() == 1);
  CHECK(*z.local_inverse[1] == 1);
  CHECK(*z.local_identity[1] == 0);

  GreenData const rb = green_relations(RB);
  CHECK(rb.number_of_h_classes() == 4);
  CHECK(rb.number_of_l_classes() == 2);
  CHECK(rb.number_of_r_classes() == 2);
  CHECK(rb.number_of_d_classes() == 1);
}

TEST_CASE("green_relations agrees with the ideal oracle on the corpus") {
  for (auto const& m : fixtures::members(6)) {
    CAPTURE(m.name);
    auto const      t = oracle::table_of(m.table);
    auto const      o = oracle::green(t);
    GreenData const g = green_relations(m.table);
    auto const      j = j_classes(m.table);
    bool const      cr = is_completely_regular(g);
    CHECK(cr == oracle::completely_regular(t));
    for (int a = 0; a < oracle::order(t); ++a) {
      for (int b = 0; b < oracle::order(t); ++b) {
        CHECK((g.lclass[a] == g.lclass[b]) == o.L(a, b));
        CHECK((g.rclass[a] == g.rclass[b]) == o.R(a, b));
        CHECK((g.hclass[a] == g.hclass[b]) == o.H(a, b));
        CHECK((g.dclass[a] == g.dclass[b]) == o.D(a, b));
        CHECK((j[a] == j[b]) == o.J(a, b));
        if (cr) {
          CHECK((g.dclass[a] == g.dclass[b]) == (j[a] == j[b]));
        }
      }
      CHECK(g.idempotent[a] == (t[a][a] == a));
      if (g.local_identity[a]) {
        elem_t const e = *g.local_identity[a];
        elem_t const x = *g.local_inverse[a];
        CHECK(t[e][e] == static_cast<int>(e));
        CHECK(t[e][a] == a);
        CHECK(t[a][e] == a);
        CHECK(o.H(a, e));
        CHECK(t[a][x] == static_cast<int>(e));
        CHECK(t[x][a] == static_cast<int>(e));
        CHECK(static_cast<int>(e) == oracle::local_identity(t, a));
      } else {
        CHECK_FALSE(cr);
      }
    }
  }
}

TEST_CASE("complete regularity and simplicity") {
  CHECK(is_completely_regular(Z2));
  CHECK(is_completely_regular(L2));
  CHECK_FALSE(is_completely_regular(N2));
  CHECK(is_completely_simple(RB));
  CHECK_FALSE(is_completely_simple(SL2));
  CHECK(is_completely_simple(validate_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}})));
  CHECK(error_of([] { is_completely_simple(N2); }) == error_kind::not_completely_regular);
  for (auto const& m : fixtures::cr_members(10)) {
    CAPTURE(m.name);
    if (is_completely_simple(m.table)) {
      CHECK(is_completely_regular(m.table));
      CHECK(green_relations(m.table).number_of_d_classes() == 1);
    }
  }
}

TEST_CASE("natural order examples") {
  NaturalOrder const o = natural_order(C3);
  CHECK(o(2, 0));
  CHECK(o(2, 1));
  CHECK_FALSE(o(0, 2));
  CHECK(o.maximal[0]);
  CHECK(o.maximal[1]);
  CHECK_FALSE(o.maximal[2]);

  NaturalOrder const rb = natural_order(RB);
  for (elem_t a = 0; a < 4; ++a) {
    CHECK(rb.maximal[a]);
    for (elem_t b = 0; b < 4; ++b) {
      CHECK(rb(a, b) == (a == b));
    }
  }
  NaturalOrder const t = natural_order(validate_table({{0}}));
  CHECK(t(0, 0));
  CHECK(t.maximal[0]);
}

TEST_CASE("natural order is a partial order matching the oracle") {
  for (auto const& m : fixtures::members(7)) {
    CAPTURE(m.name);
    auto const         t  = oracle::table_of(m.table);
    int const          n  = oracle::order(t);
    NaturalOrder const o  = natural_order(m.table);
    auto const         mx = oracle::natural_maximal(t);
    GreenData const    g  = green_relations(m.table);
    bool const         cr = is_completely_regular(g);
    for (int a = 0; a < n; ++a) {
      CHECK(o(a, a) == oracle::natural_leq(t, a, a));
      CHECK(o.maximal[a] == mx[a]);
      for (int b = 0; b < n; ++b) {
        CHECK(o(a, b) == oracle::natural_leq(t, a, b));
        if (!cr) {
          continue;
        }
        CHECK(o(a, a));
        if (a != b && o(a, b)) {
          CHECK_FALSE(o(b, a));
        }
        if (a != b && g.dclass[a] == g.dclass[b]) {
          CHECK_FALSE(o(a, b));
        }
        for (int c = 0; c < n; ++c) {
          if (o(a, b) && o(b, c)) {
            CHECK(o(a, c));
          }
        }
      }
    }
  }
}
