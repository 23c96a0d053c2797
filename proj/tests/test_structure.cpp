#include <doctest.h>

#include <random>

#include "crglobal/power.hpp"
#include "crglobal/structure.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace crglobal;
using fixtures::error_of;

TEST_CASE("decompose examples") {
  Decomposition const c = decompose(fixtures::named("clifford3"));  // e, a, z
  REQUIRE(c.number_of_components() == 2);
  CHECK(c.components[0] == std::vector<elem_t>{0, 1});
  CHECK(c.components[1] == std::vector<elem_t>{2});
  CHECK(c.classification[0] == component_kind::cs0);
  CHECK(c.classification[1] == component_kind::left_zero);
  CHECK(c.less(1, 0));
  CHECK_FALSE(c.less(0, 1));

  Decomposition const rb = decompose(fixtures::named("rectband-2x2"));
  CHECK(rb.number_of_components() == 1);
  CHECK(rb.classification[0] == component_kind::cs0);

  Decomposition const l2 = decompose(fixtures::named("L2"));
  CHECK(l2.number_of_components() == 1);
  CHECK(l2.classification[0] == component_kind::left_zero);
  CHECK(decompose(fixtures::named("R2")).classification[0] == component_kind::right_zero);

  CHECK(error_of([] { decompose(validate_table({{0, 0}, {0, 0}})); }) == error_kind::not_completely_regular);
}

TEST_CASE("id_set and component_slice") {
  CayleyTable const   S = fixtures::named("clifford3");
  Decomposition const D = decompose(S);
  CHECK(id_set(Subset::of(3, {0, 2}), D).mask == 0b11);
  CHECK(id_set(Subset::full(3), D).size() == D.number_of_components());
  for (elem_t a = 0; a < 3; ++a) {
    CHECK(id_set(Subset::singleton(3, a), D).elements() == std::vector<comp_t>{D.component_of[a]});
  }
  CHECK(component_slice(Subset::of(3, {0, 2}), 0, D) == Subset::of(3, {0}));
  CHECK(component_slice(D.component_subset(0), 0, D) == D.component_subset(0));
  CHECK_FALSE(component_slice(Subset::of(3, {2}), 0, D).has_value());
  CHECK(error_of([] { Subset(3, 0); }) == error_kind::empty_subset);
  CHECK(error_of([] { Subset(3, 0b1000); }) == error_kind::out_of_range);
}

TEST_CASE("components are the D-classes and multiply along Y") {
  for (auto const& m : fixtures::cr_members(10)) {
    CAPTURE(m.name);
    CayleyTable const&  S = m.table;
    Decomposition const D = decompose(S);
    auto const          o = oracle::green(oracle::table_of(S));
    std::size_t const   n = S.order();
    std::size_t const   k = D.number_of_components();

    for (elem_t a = 0; a < n; ++a) {
      for (elem_t b = 0; b < n; ++b) {
        CHECK((D.component_of[a] == D.component_of[b]) == o.D(a, b));
        CHECK(D.component_of[S(a, b)] == D.semilattice(D.component_of[a], D.component_of[b]));
      }
    }
    for (comp_t alpha = 0; alpha < k; ++alpha) {
      CHECK(D.components[alpha].front() == *std::min_element(D.components[alpha].begin(), D.components[alpha].end()));
      if (alpha > 0) {
        CHECK(D.components[alpha - 1].front() < D.components[alpha].front());
      }
      CHECK(D.semilattice(alpha, alpha) == alpha);
      for (comp_t beta = 0; beta < k; ++beta) {
        CHECK(D.semilattice(alpha, beta) == D.semilattice(beta, alpha));
      }
      CayleyTable const C = subtable(S, D.components[alpha]);
      CHECK(is_completely_simple(C));
      switch (D.classification[alpha]) {
        case component_kind::cs0:
          CHECK_FALSE(is_left_zero(C));
          CHECK_FALSE(is_right_zero(C));
          break;
        case component_kind::left_zero:
          CHECK(is_left_zero(C));
          break;
        case component_kind::right_zero:
          CHECK(is_right_zero(C));
          CHECK_FALSE(is_left_zero(C));
          break;
      }
    }
  }
}

TEST_CASE("id(AB) = id(A) id(B), exhaustive up to order 6") {
  for (auto const& m : fixtures::cr_members(6)) {
    CAPTURE(m.name);
    PowerSemigroup const P(m.table);
    Decomposition const& D    = *P.decomposition();
    mask_t const         full = P.full();
    std::vector<IdSet>   ids(full + 1);
    for (mask_t A = 1; A <= full; ++A) {
      ids[A] = id_set(P.subset(A), D);
      CHECK(ids[A].size() >= 1);
    }
    for (mask_t A = 1; A <= full; ++A) {
      for (mask_t B = 1; B <= full; ++B) {
        REQUIRE(ids[P.product(A, B)] == D.product(ids[A], ids[B]));
      }
    }
  }
}

TEST_CASE("id(AB) = id(A) id(B), random pairs at order 12") {
  NamedTable const     m = order12_member();
  PowerSemigroup const P(m.table);
  REQUIRE(P.decomposition().has_value());
  Decomposition const&                  D = *P.decomposition();
  std::mt19937                          rng(12345);
  std::uniform_int_distribution<mask_t> pick(1, P.full());
  for (int i = 0; i < 20000; ++i) {
    Subset const A = P.subset(pick(rng));
    Subset const B = P.subset(pick(rng));
    REQUIRE(id_set(P.product(A, B), D) == D.product(id_set(A, D), id_set(B, D)));
  }
}

TEST_CASE("is_chain and is_maximal_in") {
  Decomposition const D = decompose(fixtures::named("semilattice-v"));  // a, b over 0
  REQUIRE(D.number_of_components() == 3);
  CHECK_FALSE(D.is_chain(IdSet{0b011}));
  CHECK(D.is_chain(IdSet{0b101}));
  CHECK(D.is_maximal_in(0, IdSet{0b111}));
  CHECK(D.is_maximal_in(1, IdSet{0b111}));
  CHECK_FALSE(D.is_maximal_in(2, IdSet{0b111}));
}
