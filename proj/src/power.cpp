#include "crglobal/power.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "crglobal/breakable.hpp"

namespace crglobal {

  std::size_t default_scan_bound(std::size_t fallback) {
    if (char const* env = std::getenv("CRGLOBAL_MAX_ORDER")) {
      char*               end = nullptr;
      unsigned long const v   = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        return v;
      }
    }
    return fallback;
  }

  namespace kernels {
    namespace {
      void fill_row(CayleyTable const& S, elem_t a, mask_t* row) {
        std::uint64_t const count = std::uint64_t{1} << S.order();
        row[0]                    = 0;
        for (std::uint64_t B = 1; B < count; ++B) {
          auto const low = static_cast<elem_t>(std::countr_zero(B));
          row[B]         = row[B & (B - 1)] | (mask_t{1} << S(a, low));
        }
      }
    }  // namespace

    std::vector<mask_t> image_table_serial(CayleyTable const& S) {
      std::size_t const   n = S.order();
      std::vector<mask_t> img(n << n);
      for (elem_t a = 0; a < n; ++a) {
        fill_row(S, a, img.data() + (std::size_t{a} << n));
      }
      return img;
    }

    std::vector<mask_t> image_table_parallel(CayleyTable const& S) {
      auto const          n = static_cast<std::int64_t>(S.order());
      std::vector<mask_t> img(static_cast<std::size_t>(n) << n);
#pragma omp parallel for schedule(static, 1)
      for (std::int64_t a = 0; a < n; ++a) {
        fill_row(S, static_cast<elem_t>(a), img.data() + (static_cast<std::size_t>(a) << n));
      }
      return img;
    }
  }  // namespace kernels

  PowerSemigroup::PowerSemigroup(CayleyTable S, exec e) : _S(std::move(S)) {
    std::size_t const n = _S.order();
    if (n > max_subset_order) {
      throw error(error_kind::order_too_large,
                  "P(S) needs |S| <= " + std::to_string(max_subset_order));
    }
    if (n <= dense_limit) {
      _image = e == exec::serial ? kernels::image_table_serial(_S)
                                 : kernels::image_table_parallel(_S);
    }
    if (is_completely_regular(_S)) {
      _decomposition = decompose(_S);
    }
  }

  mask_t PowerSemigroup::product(mask_t A, mask_t B) const noexcept {
    mask_t            out = 0;
    std::size_t const n   = order();
    if (!_image.empty()) {
      for_each_bit(A, [&](elem_t a) { out |= _image[(std::size_t{a} << n) | B]; });
    } else {
      for_each_bit(A, [&](elem_t a) {
        for_each_bit(B, [&](elem_t b) { out |= mask_t{1} << _S(a, b); });
      });
    }
    return out;
  }

  Subset PowerSemigroup::product(Subset const& A, Subset const& B) const {
    if (A.parent_order() != order() || B.parent_order() != order()) {
      throw error(error_kind::parent_mismatch,
                  "subsets of orders " + std::to_string(A.parent_order()) + " and "
                      + std::to_string(B.parent_order()) + " in P(S) with |S| = "
                      + std::to_string(order()));
    }
    return Subset(order(), product(A.mask(), B.mask()));
  }

  Subset subset_product(PowerSemigroup const& P, Subset const& A, Subset const& B) {
    return P.product(A, B);
  }

  bool is_idempotent_subset(PowerSemigroup const& P, Subset const& A) {
    return P.product(A, A) == A;
  }

  std::vector<Subset> enumerate_ep(PowerSemigroup const& P, std::size_t bound, exec e) {
    if (P.order() > bound) {
      throw error(error_kind::order_too_large,
                  "|S| = " + std::to_string(P.order()) + " exceeds bound "
                      + std::to_string(bound));
    }
    auto const masks = kernels::filter(e, 1, std::uint64_t{P.full()} + 1, [&P](mask_t A) {
      return P.is_idempotent(A);
    });
    std::vector<Subset> out;
    out.reserve(masks.size());
    for (mask_t m : masks) {
      out.emplace_back(P.order(), m);
    }
    return out;
  }

  bool ep_leq(PowerSemigroup const& P, Subset const& A, Subset const& B) {
    for (Subset const* X : {&A, &B}) {
      if (!is_idempotent_subset(P, *X)) {
        throw error(error_kind::not_idempotent, X->to_string() + " is not in EP(S)");
      }
    }
    return P.product(A.mask(), B.mask()) == A.mask()
           && P.product(B.mask(), A.mask()) == A.mask();
  }

  char const* to_string(cover_kind k) noexcept {
    switch (k) {
      case cover_kind::ep: return "EP";
      case cover_kind::a2: return "A2";
      case cover_kind::a2bar: return "A2bar";
    }
    return "?";
  }

  bool covers(PowerSemigroup const& P, Subset const& A, Subset const& B, cover_kind kind) {
    if (A == B || !ep_leq(P, A, B)) {
      throw error(error_kind::not_comparable,
                  A.to_string() + " is not below " + B.to_string());
    }
    if (kind == cover_kind::a2bar && !P.decomposition()) {
      throw error(error_kind::not_completely_regular, "A2bar needs id sets");
    }
    mask_t const a = A.mask(), b = B.mask();
    for (std::uint64_t c = 1; c <= P.full(); ++c) {
      auto const C = static_cast<mask_t>(c);
      if (C == a || C == b || !P.is_idempotent(C)) {
        continue;
      }
      bool const between = P.product(a, C) == a && P.product(C, a) == a
                           && P.product(C, b) == C && P.product(b, C) == C;
      if (!between) {
        continue;
      }
      bool const witness = kind == cover_kind::ep      ? true
                           : kind == cover_kind::a2    ? is_a2(P, C)
                                                       : is_a2bar(P, C);
      if (witness) {
        return false;
      }
    }
    return true;
  }

  Subset right_ideal(PowerSemigroup const& P, Subset const& A) {
    return P.subset(P.product(A.mask(), P.full()));
  }

  Subset right_ideal_s1(PowerSemigroup const& P, Subset const& A) {
    return P.subset(A.mask() | P.product(A.mask(), P.full()));
  }

  Subset left_ideal(PowerSemigroup const& P, Subset const& A) {
    return P.subset(P.product(P.full(), A.mask()));
  }

  namespace {
    // B in A P(S)^1.
    bool in_right_ideal(PowerSemigroup const& P, mask_t A, mask_t B) {
      if (A == B) {
        return true;
      }
      for (std::uint64_t x = 1; x <= P.full(); ++x) {
        if (P.product(A, static_cast<mask_t>(x)) == B) {
          return true;
        }
      }
      return false;
    }

    bool in_left_ideal(PowerSemigroup const& P, mask_t A, mask_t B) {
      if (A == B) {
        return true;
      }
      for (std::uint64_t x = 1; x <= P.full(); ++x) {
        if (P.product(static_cast<mask_t>(x), A) == B) {
          return true;
        }
      }
      return false;
    }
  }  // namespace

  bool power_r_related(PowerSemigroup const& P, mask_t A, mask_t B) {
    return in_right_ideal(P, A, B) && in_right_ideal(P, B, A);
  }

  bool power_l_related(PowerSemigroup const& P, mask_t A, mask_t B) {
    return in_left_ideal(P, A, B) && in_left_ideal(P, B, A);
  }

  std::vector<Subset> power_h_class(PowerSemigroup const& P, Subset const& A) {
    std::optional<IdSet> ids;
    if (P.decomposition()) {
      ids = id_set(A, *P.decomposition());
    }
    std::vector<Subset> out;
    for (std::uint64_t b = 1; b <= P.full(); ++b) {
      auto const B = static_cast<mask_t>(b);
      if (ids && id_set(P.subset(B), *P.decomposition()) != *ids) {
        continue;
      }
      if (power_r_related(P, A.mask(), B) && power_l_related(P, A.mask(), B)) {
        out.push_back(P.subset(B));
      }
    }
    return out;
  }

  std::vector<Subset> power_h_of_idempotent_singleton(PowerSemigroup const& P, elem_t e) {
    if (e >= P.order() || !P.base().is_idempotent(e)) {
      throw error(error_kind::not_idempotent_element,
                  std::to_string(e) + " is not an idempotent of S");
    }
    return power_h_class(P, Subset::singleton(P.order(), e));
  }

  namespace {
    void require_left_zero(PowerSemigroup const& P, Subset const& E) {
      bool ok = true;
      for_each_bit(E.mask(), [&](elem_t x) {
        for_each_bit(E.mask(), [&](elem_t y) { ok = ok && P.base()(x, y) == x; });
      });
      if (!ok) {
        throw error(error_kind::not_left_zero,
                    E.to_string() + " is not a left zero subsemigroup");
      }
    }
  }  // namespace

  std::vector<Subset> power_h_of_left_zero_set(PowerSemigroup const& P, Subset const& E) {
    require_left_zero(P, E);
    return power_h_class(P, E);
  }

  std::vector<Subset> translates_of_left_zero_set(PowerSemigroup const& P,
                                                  Subset const&         E,
                                                  elem_t                e) {
    require_left_zero(P, E);
    if (!E.contains(e)) {
      throw error(error_kind::out_of_range, std::to_string(e) + " is not in E");
    }
    GreenData const g = P.decomposition() ? P.decomposition()->green
                                          : green_relations(P.base());
    std::vector<Subset> out;
    for (elem_t a : GreenData::members(g.hclass, g.hclass[e])) {
      Subset const Ea = P.product(E, Subset::singleton(P.order(), a));
      if (std::find(out.begin(), out.end(), Ea) == out.end()) {
        out.push_back(Ea);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace crglobal
