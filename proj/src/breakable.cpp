#include "crglobal/breakable.hpp"

#include <algorithm>
#include <functional>

namespace crglobal {

  namespace {
    void check_bound(PowerSemigroup const& P, std::size_t bound) {
      if (P.order() > bound) {
        throw error(error_kind::order_too_large,
                    "|S| = " + std::to_string(P.order()) + " exceeds bound "
                        + std::to_string(bound));
      }
    }

    bool an_holds(CayleyTable const& S, std::vector<elem_t> const& A, std::size_t n) {
      // Depth-first over all n-tuples, carrying the running product and the
      // set of factors used so far.
      std::function<bool(std::size_t, elem_t, mask_t)> rec
          = [&](std::size_t depth, elem_t prod, mask_t factors) {
              if (depth == n) {
                return ((factors >> prod) & 1U) != 0;
              }
              for (elem_t a : A) {
                if (!rec(depth + 1, S(prod, a), factors | (mask_t{1} << a))) {
                  return false;
                }
              }
              return true;
            };
      for (elem_t a : A) {
        if (!rec(1, a, mask_t{1} << a)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool satisfies_an(PowerSemigroup const& P, Subset const& A, std::size_t n) {
    if (A.parent_order() != P.order()) {
      throw error(error_kind::parent_mismatch, "subset of another semigroup");
    }
    if (!P.is_subsemigroup(A.mask())) {
      throw error(error_kind::not_subsemigroup, A.to_string() + " is not closed");
    }
    if (n == 0) {
      throw error(error_kind::out_of_range, "(A_0) is not defined");
    }
    return an_holds(P.base(), A.elements(), n);
  }

  bool is_a2(PowerSemigroup const& P, mask_t A) {
    bool ok = true;
    for_each_bit(A, [&](elem_t a) {
      for_each_bit(A, [&](elem_t b) {
        elem_t const ab = P.base()(a, b);
        ok              = ok && (ab == a || ab == b);
      });
    });
    return ok;
  }

  bool is_a3(PowerSemigroup const& P, mask_t A) {
    if (!P.is_subsemigroup(A)) {
      return false;
    }
    CayleyTable const& S = P.base();
    bool               ok = true;
    for_each_bit(A, [&](elem_t a) {
      for_each_bit(A, [&](elem_t b) {
        elem_t const ab = S(a, b);
        for_each_bit(A, [&](elem_t c) {
          elem_t const abc = S(ab, c);
          ok               = ok && (abc == a || abc == b || abc == c);
        });
      });
    });
    return ok;
  }

  bool is_a2bar(PowerSemigroup const& P, mask_t A) {
    auto const& D = P.decomposition();
    return D && is_a2(P, A) && id_set(P.subset(A), *D).size() == 1;
  }

  std::vector<Subset> enumerate_a2(PowerSemigroup const& P, std::size_t bound, exec e) {
    check_bound(P, bound);
    auto const masks = kernels::filter(e, 1, std::uint64_t{P.full()} + 1,
                                       [&P](mask_t A) { return is_a2(P, A); });
    std::vector<Subset> out;
    for (mask_t m : masks) {
      out.push_back(P.subset(m));
    }
    return out;
  }

  std::vector<Subset> enumerate_a3(PowerSemigroup const& P, std::size_t bound, exec e) {
    check_bound(P, bound);
    // A3 members are idempotent subsets, and AA = A is far cheaper to test.
    auto const masks = kernels::filter(e, 1, std::uint64_t{P.full()} + 1, [&P](mask_t A) {
      return P.is_idempotent(A) && is_a3(P, A);
    });
    std::vector<Subset> out;
    for (mask_t m : masks) {
      out.push_back(P.subset(m));
    }
    return out;
  }

  std::vector<Subset> enumerate_a2bar(PowerSemigroup const& P, std::size_t bound, exec e) {
    check_bound(P, bound);
    if (!P.decomposition()) {
      throw error(error_kind::not_completely_regular, "A2bar needs id sets");
    }
    auto const masks = kernels::filter(e, 1, std::uint64_t{P.full()} + 1,
                                       [&P](mask_t A) { return is_a2bar(P, A); });
    std::vector<Subset> out;
    for (mask_t m : masks) {
      out.push_back(P.subset(m));
    }
    return out;
  }

  char const* to_string(chunk_kind k) noexcept {
    switch (k) {
      case chunk_kind::left_zero: return "LeftZero";
      case chunk_kind::right_zero: return "RightZero";
      case chunk_kind::order_two_group_top: return "OrderTwoGroupTop";
    }
    return "?";
  }

  namespace {
    std::optional<chunk_kind> classify_chunk(CayleyTable const& S, Subset const& C) {
      bool left = true, right = true;
      for_each_bit(C.mask(), [&](elem_t a) {
        for_each_bit(C.mask(), [&](elem_t b) {
          left  = left && S(a, b) == a;
          right = right && S(a, b) == b;
        });
      });
      if (left) {
        return chunk_kind::left_zero;
      }
      if (right) {
        return chunk_kind::right_zero;
      }
      if (C.size() == 2) {
        elem_t const x = C.elements()[0], y = C.elements()[1];
        // {e, g} with e the identity and g^2 = e.
        for (auto [e, g] : {std::pair{x, y}, std::pair{y, x}}) {
          if (S(e, e) == e && S(e, g) == g && S(g, e) == g && S(g, g) == e) {
            return chunk_kind::order_two_group_top;
          }
        }
      }
      return std::nullopt;
    }

    // C below D in the EP order of P(S).
    bool chunk_below(PowerSemigroup const& P, Subset const& C, Subset const& D) {
      return P.product(C.mask(), D.mask()) == C.mask()
             && P.product(D.mask(), C.mask()) == C.mask();
    }
  }  // namespace

  BreakableForm structural_form(PowerSemigroup const& P, Subset const& A) {
    if (A.parent_order() != P.order() || !is_a3(P, A.mask())) {
      throw error(error_kind::not_a3, A.to_string() + " does not satisfy (A3)");
    }
    std::vector<elem_t> const elems = A.elements();
    GreenData const           g     = green_relations(subtable(P.base(), elems));

    std::vector<Subset> chunks;
    for (std::size_t d = 0; d < g.number_of_d_classes(); ++d) {
      std::vector<elem_t> members;
      for (elem_t local : GreenData::members(g.dclass, d)) {
        members.push_back(elems[local]);
      }
      chunks.push_back(Subset::of(P.order(), members));
    }
    // Chunks form a chain; a chunk's position is the number of chunks below it.
    BreakableForm F;
    F.chain.resize(chunks.size());
    F.kinds.resize(chunks.size());
    std::vector<bool> used(chunks.size(), false);
    for (Subset const& C : chunks) {
      std::size_t below = 0;
      for (Subset const& D : chunks) {
        if (D != C && chunk_below(P, D, C)) {
          ++below;
        }
      }
      auto kind = classify_chunk(P.base(), C);
      if (below >= chunks.size() || used[below] || !kind) {
        throw error(error_kind::not_a3, "chunks of " + A.to_string() + " do not form a chain");
      }
      used[below]     = true;
      F.chain[below]  = C;
      F.kinds[below]  = *kind;
    }
    if (!verify_form(P, A, F)) {
      throw error(error_kind::not_a3, "inconsistent structural form for " + A.to_string());
    }
    return F;
  }

  bool verify_form(PowerSemigroup const& P, Subset const& A, BreakableForm const& F) {
    if (F.chain.empty() || F.chain.size() != F.kinds.size()) {
      return false;
    }
    mask_t seen = 0;
    for (std::size_t i = 0; i < F.chain.size(); ++i) {
      mask_t const c = F.chain[i].mask();
      if ((seen & c) != 0) {
        return false;
      }
      seen |= c;
      auto kind = classify_chunk(P.base(), F.chain[i]);
      if (!kind) {
        return false;
      }
      // A singleton is also right zero; order-two groups only on top.
      if (F.kinds[i] == chunk_kind::order_two_group_top) {
        if (*kind != chunk_kind::order_two_group_top || i + 1 != F.chain.size()) {
          return false;
        }
      } else if (F.kinds[i] != *kind
                 && !(F.chain[i].is_singleton() && F.kinds[i] == chunk_kind::right_zero)) {
        return false;
      }
      for (std::size_t j = i + 1; j < F.chain.size(); ++j) {
        bool ok = true;
        for_each_bit(c, [&](elem_t a) {
          for_each_bit(F.chain[j].mask(), [&](elem_t b) {
            ok = ok && P.base()(a, b) == a && P.base()(b, a) == a;
          });
        });
        if (!ok) {
          return false;
        }
      }
    }
    return seen == A.mask();
  }

  Characterization a3_characterization(PowerSemigroup const& P,
                                       Subset const&         A,
                                       std::size_t           bound,
                                       exec                  e) {
    if (!is_idempotent_subset(P, A)) {
      throw error(error_kind::not_idempotent, A.to_string() + " is not in EP(S)");
    }
    check_bound(P, bound);
    mask_t const a       = A.mask();
    auto const   witness = kernels::find_first(e, 1, std::uint64_t{P.full()} + 1, [&](mask_t B) {
      return B != a && P.product(B, B) == a && P.product(B, a) == a;
    });
    if (witness) {
      return {false, P.subset(*witness)};
    }
    return {};
  }

  Characterization a2_characterization(PowerSemigroup const& P,
                                       Subset const&         A,
                                       std::size_t           bound,
                                       exec                  e) {
    if (A.parent_order() != P.order() || !is_a3(P, A.mask())) {
      throw error(error_kind::not_a3, A.to_string() + " does not satisfy (A3)");
    }
    check_bound(P, bound);
    mask_t const a       = A.mask();
    mask_t const as      = P.product(a, P.full());
    auto const   witness = kernels::find_first(e, 1, std::uint64_t{P.full()} + 1, [&](mask_t B) {
      return P.product(B, a) == a && P.product(a, B) == a && P.product(B, P.full()) == as
             && P.product(B, B) != B;
    });
    if (witness) {
      return {false, P.subset(*witness)};
    }
    return {};
  }

}  // namespace crglobal
