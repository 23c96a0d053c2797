#include "crglobal/globaldet.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>

namespace crglobal {

  CayleyTable power_table(CayleyTable const& S, std::size_t bound) {
    std::size_t const n = S.order();
    if (n > max_subset_order || ((std::uint64_t{1} << n) - 1) > bound) {
      throw error(error_kind::order_too_large,
                  "P(S) has 2^" + std::to_string(n) + " - 1 elements, bound is "
                      + std::to_string(bound));
    }
    PowerSemigroup const P(S, exec::serial);
    std::size_t const    N = static_cast<std::size_t>(P.size());
    std::vector<elem_t>  data(N * N);
    std::vector<std::string> labels(N);
    for (std::size_t i = 0; i < N; ++i) {
      labels[i] = P.subset(static_cast<mask_t>(i + 1)).to_string();
      for (std::size_t j = 0; j < N; ++j) {
        data[i * N + j] = P.product(static_cast<mask_t>(i + 1), static_cast<mask_t>(j + 1)) - 1;
      }
    }
    return CayleyTable::trusted(N, std::move(data), std::move(labels));
  }

  IsoMap lift(IsoMap const& phi) {
    std::size_t const n = phi.size();
    if (n == 0 || n > max_subset_order) {
      throw error(error_kind::order_too_large, "cannot lift a map on " + std::to_string(n) + " points");
    }
    std::size_t const N = (std::size_t{1} << n) - 1;
    IsoMap            psi;
    psi.domain = psi.codomain = carrier::subsets;
    psi.forward.resize(N);
    psi.inverse.resize(N);
    for (std::size_t A = 1; A <= N; ++A) {
      mask_t image = 0;
      for_each_bit(static_cast<mask_t>(A), [&](elem_t a) { image |= mask_t{1} << phi(a); });
      psi.forward[A - 1]     = image - 1;
      psi.inverse[image - 1] = static_cast<elem_t>(A - 1);
    }
    psi.verified = phi.verified;
    return psi;
  }

  GlobalIso::GlobalIso(PowerSemigroup const& P, PowerSemigroup const& Q, IsoMap const& m)
      : source(P), target(Q), psi(m) {
    if (!P.decomposition() || !Q.decomposition()) {
      throw error(error_kind::not_completely_regular, "both semigroups must be completely regular");
    }
    if (m.domain != carrier::subsets || m.size() != P.size() || P.size() != Q.size()
        || m.inverse.size() != m.size()) {
      throw error(error_kind::parent_mismatch, "psi does not map P(S) onto P(S')");
    }
  }

  namespace {
    template <typename F>
    void for_each_submask(mask_t M, F&& f) {
      for (mask_t A = M; A != 0; A = (A - 1) & M) {
        f(A);
      }
    }

    std::string mask_str(std::size_t n, mask_t m) {
      return m == 0 ? std::string("{}") : Subset(n, m).to_string();
    }

    std::string comp_witness(char const* what, comp_t alpha) {
      return std::string(what) + " at component " + std::to_string(alpha);
    }
  }  // namespace

  IsoMap extract_theta(GlobalIso const& g) {
    Decomposition const& D  = g.D();
    Decomposition const& Dt = g.Dt();
    std::size_t const    k  = D.number_of_components();
    std::size_t const    n  = g.source.order();
    if (k != Dt.number_of_components()) {
      throw error(error_kind::theta_not_singleton,
                  "structure semilattices have " + std::to_string(k) + " and "
                      + std::to_string(Dt.number_of_components()) + " elements");
    }
    std::vector<elem_t> theta(k);
    for (comp_t alpha = 0; alpha < k; ++alpha) {
      mask_t const image = g(D.component_subset(alpha).mask());
      IdSet const  ids   = id_set(g.target.subset(image), Dt);
      if (ids.size() != 1) {
        throw error(error_kind::theta_not_singleton,
                    "id psi(S_" + std::to_string(alpha) + ") = id "
                        + mask_str(n, image) + " has " + std::to_string(ids.size())
                        + " components");
      }
      theta[alpha] = ids.elements()[0];
    }
    if (!is_bijection(theta)) {
      throw error(error_kind::theta_not_singleton, "theta is not injective");
    }
    IsoMap m = make_iso_map(D.semilattice, Dt.semilattice, theta, carrier::components);
    if (!m.verified) {
      throw error(error_kind::theta_not_singleton, "theta is not a semilattice homomorphism");
    }
    for (comp_t alpha = 0; alpha < k; ++alpha) {
      mask_t const src = D.component_subset(alpha).mask();
      mask_t const dst = Dt.component_subset(theta[alpha]).mask();
      if (std::popcount(src) != std::popcount(dst)) {
        throw error(error_kind::theta_not_singleton,
                    comp_witness("|S_alpha| != |S'_theta(alpha)|", alpha));
      }
      for_each_submask(src, [&](mask_t A) {
        if ((g(A) & ~dst) != 0) {
          throw error(error_kind::theta_not_singleton,
                      "psi(" + mask_str(n, A) + ") = " + mask_str(n, g(A))
                          + " leaves P(S'_theta(alpha))");
        }
      });
    }
    return m;
  }

  RhoPartition rho_partition(CayleyTable const&   S,
                             Decomposition const& D,
                             comp_t               alpha,
                             NaturalOrder const&  order) {
    if (D.classification[alpha] == component_kind::cs0) {
      throw error(error_kind::wrong_component_kind,
                  "component " + std::to_string(alpha) + " is neither left nor right zero");
    }
    std::vector<elem_t> const& elems = D.components[alpha];
    std::vector<elem_t>        lower, upper;
    for (comp_t beta = 0; beta < D.number_of_components(); ++beta) {
      auto const& members = D.components[beta];
      if (D.less(beta, alpha)) {
        lower.insert(lower.end(), members.begin(), members.end());
      } else if (D.less(alpha, beta)) {
        upper.insert(upper.end(), members.begin(), members.end());
      }
    }
    auto related = [&](elem_t a1, elem_t a2) {
      if (a1 != a2 && !(order.maximal[a1] && order.maximal[a2])) {
        return false;
      }
      for (elem_t b : lower) {
        if (S(S(a1, b), a1) != S(S(a2, b), a2)) {
          return false;
        }
      }
      for (elem_t c : upper) {
        if (S(S(c, a1), c) != S(S(c, a2), c)) {
          return false;
        }
      }
      return true;
    };
    RhoPartition rho;
    rho.component = alpha;
    rho.block_of.assign(S.order(), RhoPartition::npos);
    rho.maximal = order.maximal;
    for (elem_t a : elems) {
      if (rho.block_of[a] != RhoPartition::npos) {
        continue;
      }
      std::size_t const id = rho.blocks.size();
      rho.blocks.emplace_back();
      for (elem_t b : elems) {
        if (rho.block_of[b] == RhoPartition::npos && related(a, b)) {
          rho.block_of[b] = id;
          rho.blocks[id].push_back(b);
        }
      }
    }
    return rho;
  }

  IsoMap construct_eta(GlobalIso const& g) {
    IsoMap const         theta = extract_theta(g);
    CayleyTable const&   S     = g.source.base();
    CayleyTable const&   T     = g.target.base();
    Decomposition const& D     = g.D();
    Decomposition const& Dt    = g.Dt();
    std::size_t const    n     = S.order();
    NaturalOrder const   order_s = natural_order(S);
    NaturalOrder const   order_t = natural_order(T);

    constexpr elem_t    unset = static_cast<elem_t>(-1);
    std::vector<elem_t> eta(n, unset);
    auto singleton_image = [&](elem_t a) {
      mask_t const X = g(mask_t{1} << a);
      if (!std::has_single_bit(X)) {
        throw error(error_kind::psi_image_not_singleton,
                    "psi({" + std::to_string(a) + "}) = " + mask_str(n, X));
      }
      return static_cast<elem_t>(std::countr_zero(X));
    };

    for (comp_t alpha = 0; alpha < D.number_of_components(); ++alpha) {
      if (D.classification[alpha] == component_kind::cs0) {
        for (elem_t a : D.components[alpha]) {
          eta[a] = singleton_image(a);
        }
        continue;
      }
      comp_t const alpha_t = theta(alpha);
      RhoPartition rho_t;
      try {
        rho_t = rho_partition(T, Dt, alpha_t, order_t);
      } catch (error const& e) {
        throw error(error_kind::eta_not_morphism,
                    comp_witness("image component has a different kind", alpha));
      }
      RhoPartition const rho = rho_partition(S, D, alpha, order_s);
      for (auto const& block : rho.blocks) {
        elem_t const a = block.front();
        if (!order_s.maximal[a]) {
          singleton_image(a);
        }
        auto const  s      = static_cast<elem_t>(std::countr_zero(g(mask_t{1} << a)));
        std::size_t target = rho_t.block_of[s];
        if (target == RhoPartition::npos || rho_t.blocks[target].size() != block.size()) {
          throw error(error_kind::block_size_mismatch,
                      "block of " + std::to_string(a) + " has " + std::to_string(block.size())
                          + " elements, block of " + std::to_string(s) + " in S' has "
                          + std::to_string(target == RhoPartition::npos
                                               ? 0
                                               : rho_t.blocks[target].size()));
        }
        for (std::size_t i = 0; i < block.size(); ++i) {
          eta[block[i]] = rho_t.blocks[target][i];
        }
      }
    }
    if (std::find(eta.begin(), eta.end(), unset) != eta.end() || !is_bijection(eta)) {
      throw error(error_kind::eta_not_morphism, "eta is not a bijection");
    }
    for (elem_t a = 0; a < n; ++a) {
      for (elem_t b = 0; b < n; ++b) {
        if (eta[S(a, b)] != T(eta[a], eta[b])) {
          throw error(error_kind::eta_not_morphism,
                      "eta(" + std::to_string(a) + "*" + std::to_string(b)
                          + ") != eta(" + std::to_string(a) + ")*eta(" + std::to_string(b) + ")");
        }
      }
    }
    return make_iso_map(S, T, std::move(eta));
  }

}  // namespace crglobal
