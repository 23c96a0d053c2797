#include "crglobal/structure.hpp"

#include <bit>

namespace crglobal {

  char const* to_string(component_kind k) noexcept {
    switch (k) {
      case component_kind::left_zero: return "LeftZero";
      case component_kind::right_zero: return "RightZero";
      case component_kind::cs0: return "CS0";
    }
    return "?";
  }

  std::size_t IdSet::size() const noexcept {
    return static_cast<std::size_t>(std::popcount(mask));
  }

  std::vector<comp_t> IdSet::elements() const {
    std::vector<comp_t> out;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      out.push_back(static_cast<comp_t>(std::countr_zero(m)));
    }
    return out;
  }

  Subset Decomposition::component_subset(comp_t alpha) const {
    return Subset::of(component_of.size(), components[alpha]);
  }

  IdSet Decomposition::product(IdSet const& x, IdSet const& y) const {
    IdSet out;
    for (comp_t a : x.elements()) {
      for (comp_t b : y.elements()) {
        out.mask |= std::uint64_t{1} << semilattice(a, b);
      }
    }
    return out;
  }

  bool Decomposition::is_maximal_in(comp_t alpha, IdSet const& ids) const {
    for (comp_t b : ids.elements()) {
      if (less(alpha, b)) {
        return false;
      }
    }
    return true;
  }

  bool Decomposition::is_chain(IdSet const& ids) const {
    auto const e = ids.elements();
    for (comp_t a : e) {
      for (comp_t b : e) {
        if (!comparable(a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  Decomposition decompose(CayleyTable const& S) {
    Decomposition D;
    D.green = green_relations(S);
    if (!is_completely_regular(D.green)) {
      throw error(error_kind::not_completely_regular,
                  "some H-class is not a group");
    }
    std::size_t const n = S.order();
    std::size_t const k = D.green.number_of_d_classes();
    D.component_of.resize(n);
    D.components.resize(k);
    for (elem_t a = 0; a < n; ++a) {
      D.component_of[a] = static_cast<comp_t>(D.green.dclass[a]);
      D.components[D.green.dclass[a]].push_back(a);
    }

    std::vector<elem_t> ytable(k * k);
    for (comp_t x = 0; x < k; ++x) {
      for (comp_t y = 0; y < k; ++y) {
        ytable[x * k + y] = D.component_of[S(D.components[x][0], D.components[y][0])];
      }
    }
    for (elem_t a = 0; a < n; ++a) {
      for (elem_t b = 0; b < n; ++b) {
        if (D.component_of[S(a, b)]
            != ytable[D.component_of[a] * k + D.component_of[b]]) {
          throw error(error_kind::not_simple_component,
                      "D is not a congruence at (" + std::to_string(a) + ","
                          + std::to_string(b) + ")");
        }
      }
    }
    D.semilattice = CayleyTable::trusted(k, std::move(ytable));
    if (!is_commutative(D.semilattice) || !is_band(D.semilattice)) {
      throw error(error_kind::not_simple_component, "S/D is not a semilattice");
    }

    for (comp_t alpha = 0; alpha < k; ++alpha) {
      CayleyTable C;
      try {
        C = subtable(S, D.components[alpha]);
      } catch (error const& e) {
        throw error(error_kind::not_simple_component,
                    "component " + std::to_string(alpha) + ": " + e.what());
      }
      if (!is_completely_simple(C)) {
        throw error(error_kind::not_simple_component,
                    "component " + std::to_string(alpha)
                        + " is not completely simple");
      }
      // Singletons are both left and right zero and are tagged left zero.
      if (is_left_zero(C)) {
        D.classification.push_back(component_kind::left_zero);
      } else if (is_right_zero(C)) {
        D.classification.push_back(component_kind::right_zero);
      } else {
        D.classification.push_back(component_kind::cs0);
      }
    }
    return D;
  }

  IdSet id_set(Subset const& A, Decomposition const& D) {
    if (A.mask() == 0) {
      throw error(error_kind::empty_subset, "id of the empty set");
    }
    if (A.parent_order() != D.component_of.size()) {
      throw error(error_kind::parent_mismatch, "subset and decomposition differ");
    }
    IdSet out;
    for_each_bit(A.mask(), [&](elem_t a) {
      out.mask |= std::uint64_t{1} << D.component_of[a];
    });
    return out;
  }

  std::optional<Subset> component_slice(Subset const&        A,
                                        comp_t               alpha,
                                        Decomposition const& D) {
    mask_t const m = A.mask() & D.component_subset(alpha).mask();
    if (m == 0) {
      return std::nullopt;
    }
    return Subset(A.parent_order(), m);
  }

}  // namespace crglobal
