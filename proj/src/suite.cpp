#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <string>

#include "crglobal/breakable.hpp"
#include "crglobal/globaldet.hpp"

namespace crglobal {

  namespace {
    struct statement {
      char const* id;
      char const* anchor;
    };

    constexpr statement statements[] = {
        {"a3-bijection", "psi maps A3(S) bijectively onto A3(S')"},
        {"a2-bijection", "psi maps A2(S) bijectively onto A2(S')"},
        {"a2bar-bijection", "psi maps the single-component members of A2(S) bijectively onto those of S'"},
        {"a3-local-identities", "A in A3(S): a^0 in A for all a in A; B inside A with B^2 = A forces B = A"},
        {"a3-square-roots",
         "A in A3(S): B^2 = A gives id B = id A; id B inside id A with BA = AB = A gives B inside A; "
         "BA = B^2 = A gives B = A"},
        {"a3-element-structure",
         "A in EP(S) with no B != A such that BA = B^2 = A: a^3 = a, products stay in {a,b,a^0,b^0}, id A is a "
         "chain, H-class traces, lower slices are left or right zero and absorbing, a non-idempotent top slice "
         "is a group of order two"},
        {"power-green-ideals", "A R B in P(S) gives AS = BS; A D B in P(S) gives id A = id B"},
        {"r-cover-ideals", "A and B meeting the same R-classes of S give AS = BS and psi(A)S' = psi(B)S'"},
        {"local-identity-absorption", "s psi(S) = s^0 psi(S) for every s in S'"},
        {"a2-below-ep",
         "A in A2(S), B in EP(S), A <= B: B_alpha inside A_alpha on shared components, equal on a shared maximal "
         "component"},
        {"a2-drop-nonmaximal",
         "A in A2(S), a in a non-maximal slice of A: A minus a is in A2(S) and A is covered by it in EP(S)"},
        {"theta-isomorphism",
         "theta(alpha) = id psi(S_alpha) is a semilattice isomorphism and psi(P(S_alpha)) = P(S'_theta(alpha))"},
        {"cs0-restriction",
         "psi restricted to a component that is neither left nor right zero is an isomorphism onto "
         "S'_theta(alpha)"},
        {"a2-pair-union", "{a,b} in A2(S) with a below b: psi({a,b}) = psi(a) u psi(b) and psi(a) is a singleton"},
        {"nonmaximal-singleton",
         "a in a left or right zero component and not maximal in S: psi(a) is a singleton"},
        {"sandwich-preimage",
         "alpha > beta, a in S_alpha, B in P(S_beta), s in psi(a): psi^-1(s) B psi^-1(s) = aBa"},
        {"sandwich-singleton",
         "alpha > beta: psi(a) t psi(a) is a singleton for t in S'_theta(beta), and s psi(b) s for s in "
         "S'_theta(alpha)"},
        {"rho-sandwich", "A inside the rho class of a: ABA = aBa over lower components, CAC = CaC over upper ones"},
        {"rho-products", "a1 rho a2 gives a1 b = a2 b and b a1 = b a2 for b in lower components"},
        {"rho-transfer", "for s in psi(a): A inside the rho class of a iff psi(A) inside the rho class of s"},
        {"rho-target-independent", "all s in psi(a) lie in one rho class of S'_theta(alpha)"},
        {"eta-isomorphism", "eta assembled from psi and the rho classes is an isomorphism S -> S'"},
    };

    std::string ms(std::size_t n, mask_t m) {
      return m == 0 ? std::string("{}") : Subset(n, m).to_string();
    }

    template <typename F>
    void for_each_submask(mask_t M, F&& f) {
      for (mask_t A = M; A != 0; A = (A - 1) & M) {
        f(A);
      }
    }

    class suite {
     public:
      explicit suite(std::vector<StatementResult>& out) : _out(out) {}

      // Evaluates every statement for psi: P(S) -> P(S'). Statements that do
      // not mention psi are evaluated on S.
      void run(GlobalIso const& g, bool with_eta) {
        PowerSemigroup const& P  = g.source;
        PowerSemigroup const& Q  = g.target;
        CayleyTable const&    S  = P.base();
        Decomposition const&  D  = g.D();
        Decomposition const&  Dt = g.Dt();
        std::size_t const     n  = S.order();
        mask_t const          full   = P.full();
        mask_t const          full_t = Q.full();
        auto const&           green  = D.green;
        auto zero = [&](elem_t a) { return *green.local_identity[a]; };
        auto bit  = [](elem_t a) { return mask_t{1} << a; };
        auto ids  = [&](mask_t A) { return id_set(Subset(n, A), D); };
        std::vector<mask_t> comp(D.number_of_components());
        for (comp_t alpha = 0; alpha < comp.size(); ++alpha) {
          comp[alpha] = D.component_subset(alpha).mask();
        }
        std::vector<mask_t> comp_t_mask(Dt.number_of_components());
        for (comp_t alpha = 0; alpha < comp_t_mask.size(); ++alpha) {
          comp_t_mask[alpha] = Dt.component_subset(alpha).mask();
        }

        auto const ep    = enumerate_ep(P, n, exec::serial);
        auto const a3    = enumerate_a3(P, n, exec::serial);
        auto const a2    = enumerate_a2(P, n, exec::serial);
        auto const a2bar = enumerate_a2bar(P, n, exec::serial);

        // Bijections of the breakable families.
        auto bijection = [&](char const* id, std::vector<Subset> const& fam,
                             std::vector<Subset> const& fam_t, bool (*member)(PowerSemigroup const&, mask_t)) {
          for (auto const& A : fam) {
            mask_t const X = g(A.mask());
            expect(id, member(Q, X), [&] { return "A=" + A.to_string() + " psi(A)=" + ms(n, X); });
          }
          for (auto const& X : fam_t) {
            mask_t const A = g.inverse(X.mask());
            expect(id, member(P, A), [&] { return "X=" + X.to_string() + " psi^-1(X)=" + ms(n, A); });
          }
        };
        bijection("a3-bijection", a3, enumerate_a3(Q, n, exec::serial), is_a3);
        bijection("a2-bijection", a2, enumerate_a2(Q, n, exec::serial), is_a2);
        bijection("a2bar-bijection", a2bar, enumerate_a2bar(Q, n, exec::serial), is_a2bar);

        for (auto const& As : a3) {
          mask_t const A = As.mask();
          for_each_bit(A, [&](elem_t a) {
            expect("a3-local-identities", (A >> zero(a)) & 1U,
                   [&] { return "A=" + ms(n, A) + " a=" + std::to_string(a); });
          });
          for_each_submask(A, [&](mask_t B) {
            if (P.product(B, B) == A) {
              expect("a3-local-identities", B == A, [&] { return "A=" + ms(n, A) + " B=" + ms(n, B); });
            }
          });
          for (mask_t B = 1; B != 0 && B <= full; ++B) {
            mask_t const BB = P.product(B, B), BA = P.product(B, A), AB = P.product(A, B);
            auto         w  = [&] { return "A=" + ms(n, A) + " B=" + ms(n, B); };
            if (BB == A) {
              expect("a3-square-roots", ids(B) == ids(A), w);
            }
            if ((ids(B).mask & ~ids(A).mask) == 0 && BA == A && AB == A) {
              expect("a3-square-roots", (B & ~A) == 0, w);
            }
            if (BA == A && BB == A) {
              expect("a3-square-roots", B == A, w);
            }
          }
        }

        for (auto const& As : ep) {
          if (!a3_characterization(P, As, n, exec::serial)) {
            continue;
          }
          element_structure(P, D, As.mask());
        }

        {
          GreenData const pg = green_relations(power_table(S));
          for (mask_t A = 1; A <= full; ++A) {
            for (mask_t B = 1; B <= full; ++B) {
              auto w = [&] { return "A=" + ms(n, A) + " B=" + ms(n, B); };
              if (pg.rclass[A - 1] == pg.rclass[B - 1]) {
                expect("power-green-ideals", P.product(A, full) == P.product(B, full), w);
              }
              if (pg.dclass[A - 1] == pg.dclass[B - 1]) {
                expect("power-green-ideals", ids(A) == ids(B), w);
              }
            }
          }
        }

        {
          auto r_classes = [&](mask_t A) {
            std::uint64_t m = 0;
            for_each_bit(A, [&](elem_t a) { m |= std::uint64_t{1} << green.rclass[a]; });
            return m;
          };
          for (mask_t A = 1; A <= full; ++A) {
            for (mask_t B = 1; B <= full; ++B) {
              if (r_classes(A) != r_classes(B)) {
                continue;
              }
              expect("r-cover-ideals",
                     P.product(A, full) == P.product(B, full)
                         && Q.product(g(A), full_t) == Q.product(g(B), full_t),
                     [&] { return "A=" + ms(n, A) + " B=" + ms(n, B); });
            }
          }
        }

        {
          mask_t const image = g.inverse(full_t);
          for (elem_t s = 0; s < n; ++s) {
            expect("local-identity-absorption",
                   P.product(bit(s), image) == P.product(bit(zero(s)), image),
                   [&] { return "s=" + std::to_string(s) + " psi(S)=" + ms(n, image); });
          }
        }

        for (auto const& As : a2) {
          mask_t const A   = As.mask();
          IdSet const  idA = ids(A);
          for (auto const& Bs : ep) {
            mask_t const B = Bs.mask();
            if (P.product(A, B) != A || P.product(B, A) != A) {
              continue;
            }
            IdSet const idB = ids(B);
            for (comp_t alpha : idA.elements()) {
              if (!idB.contains(alpha)) {
                continue;
              }
              mask_t const Aa = A & comp[alpha], Ba = B & comp[alpha];
              auto w = [&] { return "A=" + ms(n, A) + " B=" + ms(n, B) + " alpha=" + std::to_string(alpha); };
              expect("a2-below-ep", (Ba & ~Aa) == 0, w);
              if (D.is_maximal_in(alpha, idA) && D.is_maximal_in(alpha, idB)) {
                expect("a2-below-ep", Ba == Aa, w);
              }
            }
          }
          for (comp_t alpha : idA.elements()) {
            if (D.is_maximal_in(alpha, idA)) {
              continue;
            }
            for_each_bit(A & comp[alpha], [&](elem_t a) {
              mask_t const B  = A & ~bit(a);
              bool         ok = is_a2(P, B);
              if (ok) {
                try {
                  ok = covers(P, As, P.subset(B), cover_kind::ep);
                } catch (error const&) {
                  ok = false;
                }
              }
              expect("a2-drop-nonmaximal", ok, [&] { return "A=" + ms(n, A) + " a=" + std::to_string(a); });
            });
          }
        }

        std::optional<IsoMap> theta;
        try {
          theta = extract_theta(g);
          expect("theta-isomorphism", theta->verified, [] { return std::string("theta not verified"); });
        } catch (error const& e) {
          expect("theta-isomorphism", false, [&] { return std::string(e.what()); });
        }

        NaturalOrder const order   = natural_order(S);
        NaturalOrder const order_t = natural_order(Q.base());

        if (theta) {
          for (comp_t alpha = 0; alpha < comp.size(); ++alpha) {
            if (D.classification[alpha] != component_kind::cs0) {
              continue;
            }
            mask_t image = 0;
            bool   ok    = true;
            for_each_bit(comp[alpha], [&](elem_t a) {
              mask_t const X = g(bit(a));
              ok             = ok && std::has_single_bit(X);
              image |= X;
            });
            ok = ok && image == comp_t_mask[(*theta)(alpha)];
            expect("cs0-restriction", ok, [&] {
              return "alpha=" + std::to_string(alpha) + " image=" + ms(n, image);
            });
          }
        }

        for (elem_t a = 0; a < n; ++a) {
          for (elem_t b = 0; b < n; ++b) {
            if (!D.less(D.component_of[a], D.component_of[b]) || !is_a2(P, bit(a) | bit(b))) {
              continue;
            }
            mask_t const Xa = g(bit(a));
            expect("a2-pair-union",
                   g(bit(a) | bit(b)) == (Xa | g(bit(b))) && std::has_single_bit(Xa),
                   [&] { return "a=" + std::to_string(a) + " b=" + std::to_string(b); });
          }
        }

        for (elem_t a = 0; a < n; ++a) {
          if (D.classification[D.component_of[a]] == component_kind::cs0 || order.maximal[a]) {
            continue;
          }
          expect("nonmaximal-singleton", std::has_single_bit(g(bit(a))),
                 [&] { return "a=" + std::to_string(a) + " psi(a)=" + ms(n, g(bit(a))); });
        }

        for (comp_t alpha = 0; alpha < comp.size(); ++alpha) {
          for (comp_t beta = 0; beta < comp.size(); ++beta) {
            if (!D.less(beta, alpha)) {
              continue;
            }
            for_each_bit(comp[alpha], [&](elem_t a) {
              mask_t const Xa = g(bit(a));
              for_each_bit(Xa, [&](elem_t s) {
                mask_t const U = g.inverse(bit(s));
                for_each_submask(comp[beta], [&](mask_t B) {
                  expect("sandwich-preimage", P.product(U, B, U) == P.product(bit(a), B, bit(a)), [&] {
                    return "a=" + std::to_string(a) + " s=" + std::to_string(s) + " B=" + ms(n, B);
                  });
                });
              });
              if (theta) {
                for_each_bit(comp_t_mask[(*theta)(beta)], [&](elem_t t) {
                  expect("sandwich-singleton", std::has_single_bit(Q.product(Xa, bit(t), Xa)),
                         [&] { return "a=" + std::to_string(a) + " t=" + std::to_string(t); });
                });
              }
            });
            if (theta) {
              for_each_bit(comp_t_mask[(*theta)(alpha)], [&](elem_t s) {
                for_each_bit(comp[beta], [&](elem_t b) {
                  expect("sandwich-singleton", std::has_single_bit(Q.product(bit(s), g(bit(b)), bit(s))),
                         [&] { return "s=" + std::to_string(s) + " b=" + std::to_string(b); });
                });
              });
            }
          }
        }

        for (comp_t alpha = 0; alpha < comp.size(); ++alpha) {
          if (D.classification[alpha] == component_kind::cs0) {
            continue;
          }
          RhoPartition const rho = rho_partition(S, D, alpha, order);
          std::vector<mask_t> block_mask;
          for (auto const& block : rho.blocks) {
            block_mask.push_back(Subset::of(n, block).mask());
          }
          auto block_of = [&](elem_t a) { return block_mask[rho.block_of[a]]; };
          for (comp_t beta = 0; beta < comp.size(); ++beta) {
            bool const lower = D.less(beta, alpha), upper = D.less(alpha, beta);
            if (!lower && !upper) {
              continue;
            }
            for (mask_t M : block_mask) {
              for_each_submask(M, [&](mask_t A) {
                for_each_bit(M, [&](elem_t a) {
                  for_each_submask(comp[beta], [&](mask_t B) {
                    bool const ok = lower ? P.product(A, B, A) == P.product(bit(a), B, bit(a))
                                          : P.product(B, A, B) == P.product(B, bit(a), B);
                    expect("rho-sandwich", ok, [&] {
                      return "A=" + ms(n, A) + " a=" + std::to_string(a) + " B=" + ms(n, B);
                    });
                  });
                });
              });
              if (!lower) {
                continue;
              }
              for_each_bit(M, [&](elem_t a1) {
                for_each_bit(M, [&](elem_t a2) {
                  for_each_bit(comp[beta], [&](elem_t b) {
                    expect("rho-products", S(a1, b) == S(a2, b) && S(b, a1) == S(b, a2), [&] {
                      return "a1=" + std::to_string(a1) + " a2=" + std::to_string(a2) + " b=" + std::to_string(b);
                    });
                  });
                });
              });
            }
          }

          if (!theta) {
            continue;
          }
          comp_t const alpha_t = (*theta)(alpha);
          std::optional<RhoPartition> rho_t;
          try {
            rho_t = rho_partition(Q.base(), Dt, alpha_t, order_t);
          } catch (error const& e) {
            expect("rho-transfer", false, [&] { return std::string(e.what()); });
            continue;
          }
          auto block_t = [&](elem_t s) { return Subset::of(n, rho_t->blocks[rho_t->block_of[s]]).mask(); };
          for_each_bit(comp[alpha], [&](elem_t a) {
            mask_t const Xa = g(bit(a));
            std::size_t const first = rho_t->block_of[static_cast<elem_t>(std::countr_zero(Xa))];
            for_each_bit(Xa, [&](elem_t s) {
              expect("rho-target-independent", rho_t->block_of[s] == first,
                     [&] { return "a=" + std::to_string(a) + " s=" + std::to_string(s); });
              mask_t const Ms = block_t(s);
              for_each_submask(comp[alpha], [&](mask_t A) {
                bool const lhs = (A & ~block_of(a)) == 0;
                bool const rhs = (g(A) & ~Ms) == 0;
                expect("rho-transfer", lhs == rhs, [&] {
                  return "a=" + std::to_string(a) + " s=" + std::to_string(s) + " A=" + ms(n, A);
                });
              });
            });
          });
        }

        if (with_eta) {
          try {
            IsoMap const eta = construct_eta(g);
            expect("eta-isomorphism", eta.verified, [] { return std::string("eta not verified"); });
          } catch (error const& e) {
            expect("eta-isomorphism", false, [&] { return std::string(e.what()); });
          }
        }
      }

     private:
      std::vector<StatementResult>& _out;

      StatementResult& result(char const* id) {
        for (auto& r : _out) {
          if (r.id == id) {
            return r;
          }
        }
        throw error(error_kind::out_of_range, std::string("unknown statement ") + id);
      }

      template <typename W>
      void expect(char const* id, bool ok, W&& witness) {
        StatementResult& r = result(id);
        ++r.checked;
        if (!ok && r.pass) {
          r.pass    = false;
          r.witness = witness();
        }
      }

      void element_structure(PowerSemigroup const& P, Decomposition const& D, mask_t A) {
        CayleyTable const& S     = P.base();
        std::size_t const  n     = S.order();
        auto const&        green = D.green;
        auto zero = [&](elem_t a) { return *green.local_identity[a]; };
        char const* id = "a3-element-structure";
        auto        w  = [&](char const* clause) {
          return [&, clause] { return std::string(clause) + " A=" + ms(n, A); };
        };
        IdSet const idA = id_set(Subset(n, A), D);
        for_each_bit(A, [&](elem_t a) {
          expect(id, S(S(a, a), a) == a && ((A >> zero(a)) & 1U), w("(i)"));
          for_each_bit(A, [&](elem_t b) {
            elem_t const ab = S(a, b);
            expect(id, ab == a || ab == b || ab == zero(a) || ab == zero(b), w("(ii)"));
          });
          if (!S.is_idempotent(a)) {
            mask_t h = 0;
            for_each_bit(A, [&](elem_t x) {
              if (green.hclass[x] == green.hclass[a]) {
                h |= mask_t{1} << x;
              }
            });
            expect(id, h == ((mask_t{1} << a) | (mask_t{1} << zero(a))), w("(iv)"));
          }
        });
        expect(id, D.is_chain(idA), w("(iii)"));
        for (comp_t alpha : idA.elements()) {
          mask_t const Aa = A & D.component_subset(alpha).mask();
          std::vector<elem_t> const el = Subset(n, Aa).elements();
          bool same_l = true, same_r = true, left_zero = true, right_zero = true;
          for (elem_t x : el) {
            same_l = same_l && green.lclass[x] == green.lclass[el[0]];
            same_r = same_r && green.rclass[x] == green.rclass[el[0]];
            for (elem_t y : el) {
              left_zero  = left_zero && S(x, y) == x;
              right_zero = right_zero && S(x, y) == y;
            }
          }
          expect(id, same_l || same_r, w("(v)"));
          if (!D.is_maximal_in(alpha, idA)) {
            expect(id, left_zero || right_zero, w("(vi)"));
            for (comp_t beta : idA.elements()) {
              if (!D.less(alpha, beta)) {
                continue;
              }
              for_each_bit(Aa, [&](elem_t a) {
                for_each_bit(A & D.component_subset(beta).mask(), [&](elem_t b) {
                  expect(id, S(a, b) == a && S(b, a) == a, w("(vi)"));
                });
              });
            }
            continue;
          }
          for (elem_t a : el) {
            if (S.is_idempotent(a)) {
              continue;
            }
            elem_t const e = zero(a);
            expect(id,
                   Aa == ((mask_t{1} << a) | (mask_t{1} << e)) && S(a, a) == e && S(a, e) == a
                       && S(e, a) == a,
                   w("(vii)"));
          }
        }
      }
    };
  }  // namespace

  std::vector<std::string> const& statement_ids() {
    static std::vector<std::string> const ids = [] {
      std::vector<std::string> out;
      for (auto const& s : statements) {
        out.emplace_back(s.id);
      }
      return out;
    }();
    return ids;
  }

  std::vector<StatementResult> verify_statement_suite(GlobalIso const& g, std::size_t bound) {
    if (g.source.order() > bound) {
      throw error(error_kind::order_too_large,
                  "statement suite is bounded to order " + std::to_string(bound));
    }
    std::vector<StatementResult> out;
    for (auto const& s : statements) {
      out.push_back({s.id, s.anchor, 0, true, {}});
    }
    suite run(out);
    run.run(g, true);
    // The statements are symmetric in psi and psi^-1, so the inverse is
    // checked as well; eta only once.
    IsoMap inverse = g.psi;
    std::swap(inverse.forward, inverse.inverse);
    run.run(GlobalIso(g.target, g.source, inverse), false);
    return out;
  }

}  // namespace crglobal
