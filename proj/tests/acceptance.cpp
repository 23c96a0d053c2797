// Acceptance criteria, one line each. Every verdict is recomputed against the
// brute-force oracle in oracle.hpp rather than trusting the library alone.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "crglobal/breakable.hpp"
#include "crglobal/globaldet.hpp"
#include "crglobal/verify.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace crglobal;

namespace {

  constexpr std::size_t characterization_order = 6;
  constexpr std::size_t h_class_order          = 6;
  constexpr std::size_t sweep_order            = 5;
  constexpr std::size_t psi_limit              = 8;
  constexpr std::size_t min_psi_instances      = 20;
  constexpr double      characterization_secs  = 30.0;
  constexpr double      h_class_secs           = 60.0;
  constexpr double      sweep_secs             = 120.0;
  constexpr double      order12_secs           = 10.0;

  using clock = std::chrono::steady_clock;

  double since(clock::time_point t0) {
    return std::chrono::duration<double>(clock::now() - t0).count();
  }

  struct Outcome {
    bool        pass = true;
    std::string detail;
    std::string failure;

    void fail(std::string const& why) {
      if (pass) {
        failure = why;
      }
      pass = false;
    }
  };

  int failures = 0;

  void report(char const* id, char const* what, Outcome const& o) {
    std::printf("%s %-4s %s: %s%s%s\n", id, o.pass ? "PASS" : "FAIL", what, o.detail.c_str(),
                o.pass ? "" : " -- ", o.pass ? "" : o.failure.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }

  std::string str(oracle::Set const& s) {
    std::string out = "{";
    for (int x : s) {
      out += (out.size() > 1 ? "," : "") + std::to_string(x);
    }
    return out + "}";
  }

  bool is_a3_oracle(oracle::Table const& t, oracle::Set const& A) {
    return oracle::closed(t, A) && oracle::an(t, A, 3);
  }

  Outcome characterization(bool a2) {
    Outcome     o;
    auto const  t0      = clock::now();
    std::size_t checked = 0;
    for (auto const& m : fixtures::cr_members(characterization_order)) {
      PowerSemigroup const P(m.table);
      auto const           t = oracle::table_of(m.table);
      for (auto const& A : oracle::subsets(t)) {
        if (!oracle::idempotent(t, A)) {
          continue;
        }
        Subset const sub = P.subset(oracle::mask_of(A));
        bool const   a3  = is_a3_oracle(t, A);
        if (!a2) {
          ++checked;
          if (a3_characterization(P, sub).holds != a3) {
            o.fail(m.name + " A=" + str(A));
          }
        } else if (a3) {
          ++checked;
          if (a2_characterization(P, sub).holds != oracle::an(t, A, 2)) {
            o.fail(m.name + " A=" + str(A));
          }
        }
      }
    }
    double const secs = since(t0);
    if (secs >= characterization_secs) {
      o.fail("took " + std::to_string(secs) + " s");
    }
    o.detail = std::to_string(checked) + " subsets, " + std::to_string(secs) + " s";
    return o;
  }

  Outcome structural_forms() {
    Outcome     o;
    std::size_t checked = 0;
    for (auto const& m : fixtures::cr_members(characterization_order)) {
      PowerSemigroup const P(m.table);
      auto const           t = oracle::table_of(m.table);
      for (auto const& A : oracle::subsets(t)) {
        if (!is_a3_oracle(t, A)) {
          continue;
        }
        ++checked;
        Subset const        sub = P.subset(oracle::mask_of(A));
        BreakableForm const F   = structural_form(P, sub);
        std::string const   where = m.name + " A=" + str(A);
        if (!verify_form(P, sub, F)) {
          o.fail(where + " verify_form");
        }
        if (F.is_breakable() != oracle::an(t, A, 2)) {
          o.fail(where + " breakable");
        }
        oracle::Set seen;
        for (std::size_t i = 0; i < F.chain.size(); ++i) {
          oracle::Set const chunk = oracle::set_of_mask(F.chain[i].mask());
          for (int x : chunk) {
            if (!seen.insert(x).second) {
              o.fail(where + " chunks overlap");
            }
            for (int y : chunk) {
              bool ok = true;
              switch (F.kinds[i]) {
                case chunk_kind::left_zero:
                  ok = t[x][y] == x;
                  break;
                case chunk_kind::right_zero:
                  ok = t[x][y] == y;
                  break;
                case chunk_kind::order_two_group_top:
                  // Two elements, closed, exactly one idempotent: the group of order two.
                  ok = i + 1 == F.chain.size() && chunk.size() == 2 && chunk.count(t[x][y]) == 1
                       && (t[*chunk.begin()][*chunk.begin()] == *chunk.begin())
                              != (t[*chunk.rbegin()][*chunk.rbegin()] == *chunk.rbegin());
                  break;
              }
              if (!ok) {
                o.fail(where + " chunk kind");
              }
            }
            for (std::size_t j = i + 1; j < F.chain.size(); ++j) {
              for (int y : oracle::set_of_mask(F.chain[j].mask())) {
                if (t[x][y] != x || t[y][x] != x) {
                  o.fail(where + " lower chunk does not absorb");
                }
              }
            }
          }
        }
        if (seen != A) {
          o.fail(where + " chunks do not reconstruct A");
        }
      }
    }
    o.detail = std::to_string(checked) + " members of A3";
    return o;
  }

  Outcome h_classes() {
    Outcome     o;
    auto const  t0      = clock::now();
    std::size_t checked = 0;
    for (auto const& m : fixtures::cr_members(h_class_order)) {
      PowerSemigroup const P(m.table);
      auto const           t  = oracle::table_of(m.table);
      auto const           g  = oracle::green(t);
      auto const           pg = oracle::green(oracle::power_table(t));
      auto const           subs = oracle::subsets(t);
      auto h_in_power = [&](oracle::Set const& E) {
        std::set<oracle::Set> out;
        int const             i = static_cast<int>(oracle::mask_of(E)) - 1;
        for (std::size_t j = 0; j < subs.size(); ++j) {
          if (pg.H(i, static_cast<int>(j))) {
            out.insert(subs[j]);
          }
        }
        return out;
      };
      auto to_sets = [](std::vector<Subset> const& v) {
        std::set<oracle::Set> out;
        for (auto const& A : v) {
          out.insert(oracle::set_of_mask(A.mask()));
        }
        return out;
      };
      for (int e = 0; e < oracle::order(t); ++e) {
        if (t[e][e] != e) {
          continue;
        }
        ++checked;
        std::set<oracle::Set> expected;
        for (int a = 0; a < oracle::order(t); ++a) {
          if (g.H(a, e)) {
            expected.insert({a});
          }
        }
        if (h_in_power({e}) != expected
            || to_sets(power_h_of_idempotent_singleton(P, static_cast<elem_t>(e))) != expected) {
          o.fail(m.name + " e=" + std::to_string(e));
        }
      }
      for (auto const& E : subs) {
        bool left_zero = true;
        for (int x : E) {
          for (int y : E) {
            left_zero = left_zero && t[x][y] == x;
          }
        }
        if (!left_zero) {
          continue;
        }
        ++checked;
        auto const h = h_in_power(E);
        if (to_sets(power_h_of_left_zero_set(P, P.subset(oracle::mask_of(E)))) != h) {
          o.fail(m.name + " E=" + str(E));
        }
        for (int e : E) {
          std::set<oracle::Set> translates;
          for (int a = 0; a < oracle::order(t); ++a) {
            if (g.H(a, e)) {
              translates.insert(oracle::product(t, E, {a}));
            }
          }
          if (translates != h) {
            o.fail(m.name + " E=" + str(E) + " e=" + std::to_string(e));
          }
        }
      }
    }
    double const secs = since(t0);
    if (secs >= h_class_secs) {
      o.fail("took " + std::to_string(secs) + " s");
    }
    o.detail = std::to_string(checked) + " idempotents and left zero subsets, " + std::to_string(secs) + " s";
    return o;
  }

  struct SweepResult {
    Outcome                             theta, eta, suite;
    std::size_t                         instances    = 0;
    std::size_t                         searched     = 0;
    bool                                left_zero_mover = false;
    std::map<std::string, std::uint64_t> coverage;
    double                              secs = 0;
  };

  SweepResult sweep() {
    SweepResult r;
    auto const  t0 = clock::now();
    auto const  ms = fixtures::cr_members(sweep_order);
    for (auto const& s : ms) {
      for (auto const& u : ms) {
        if (s.table.order() != u.table.order()) {
          continue;
        }
        PowerSemigroup const P(s.table);
        PowerSemigroup const Q(u.table);
        auto const           ts  = oracle::table_of(s.table);
        auto const           tu  = oracle::table_of(u.table);
        auto const           pts = oracle::power_table(ts);
        auto const           ptu = oracle::power_table(tu);
        for (auto const& inst : psi_candidates(s, u, psi_limit)) {
          std::string const where = inst.name;
          ++r.instances;
          r.searched += inst.from_search ? 1 : 0;
          if (inst.from_search && is_left_zero(s.table) && s.table.order() > 1
              && moves_a_singleton(inst.psi, s.table.order())) {
            r.left_zero_mover = true;
          }
          std::vector<int> const psi(inst.psi.forward.begin(), inst.psi.forward.end());
          if (!oracle::isomorphism(pts, ptu, psi)) {
            r.theta.fail(where + " psi is not an isomorphism of the power tables");
            continue;
          }
          GlobalIso const g(P, Q, inst.psi);

          try {
            IsoMap const         theta = extract_theta(g);
            Decomposition const& D     = g.D();
            Decomposition const& Dt    = g.Dt();
            std::vector<int> const th(theta.forward.begin(), theta.forward.end());
            if (!oracle::isomorphism(oracle::table_of(D.semilattice), oracle::table_of(Dt.semilattice), th)) {
              r.theta.fail(where + " theta is not a semilattice isomorphism");
            }
            for (comp_t alpha = 0; alpha < D.number_of_components(); ++alpha) {
              mask_t const Sa  = D.component_subset(alpha).mask();
              mask_t const Sta = Dt.component_subset(theta(alpha)).mask();
              if (std::popcount(Sa) != std::popcount(Sta)) {
                r.theta.fail(where + " component sizes differ");
              }
              for (mask_t A = Sa; A != 0; A = (A - 1) & Sa) {
                if ((apply(inst.psi, A) & ~Sta) != 0) {
                  r.theta.fail(where + " psi(P(S_alpha)) leaves P(S'_theta(alpha))");
                }
              }
            }
          } catch (error const& e) {
            r.theta.fail(where + " " + e.what());
          }

          try {
            IsoMap const eta = construct_eta(g);
            if (!oracle::isomorphism(ts, tu, std::vector<int>(eta.forward.begin(), eta.forward.end()))) {
              r.eta.fail(where + " eta is not an isomorphism");
            }
          } catch (error const& e) {
            r.eta.fail(where + " " + e.what());
          }

          try {
            for (auto const& res : verify_statement_suite(g, sweep_order)) {
              r.coverage[res.id] += res.checked;
              if (!res.pass) {
                r.suite.fail(where + " " + res.id + ": " + res.witness);
              }
            }
          } catch (error const& e) {
            r.suite.fail(where + " " + e.what());
          }
        }
      }
    }
    r.secs = since(t0);
    return r;
  }

  Outcome performance() {
    Outcome              o;
    NamedTable const     m  = order12_member();
    auto const           t0 = clock::now();
    PowerSemigroup const P(m.table);
    auto const           ep = enumerate_ep(P, 12);
    auto const           a3 = enumerate_a3(P, 12);
    double const         secs = since(t0);
    if (!is_completely_regular(m.table) || m.table.order() != 12) {
      o.fail("the constructed member is not completely regular of order 12");
    }
    auto const t = oracle::table_of(m.table);
    for (auto const& A : a3) {
      if (!is_a3_oracle(t, oracle::set_of_mask(A.mask()))) {
        o.fail("A=" + A.to_string() + " is not in A3");
      }
    }
    if (secs >= order12_secs) {
      o.fail("took " + std::to_string(secs) + " s");
    }
    o.detail = m.name + ": |EP| = " + std::to_string(ep.size()) + ", |A3| = " + std::to_string(a3.size()) + ", "
               + std::to_string(secs) + " s";
    return o;
  }

  Outcome determinism() {
    Outcome       o;
    VerifyOptions opts;
    opts.prof             = profile::full;
    std::string const one = run_verification(opts).to_jsonl();
    std::string const two = run_verification(opts).to_jsonl();
    if (one != two) {
      o.fail("reports differ");
    }
    o.detail = std::to_string(one.size()) + " bytes, identical";
    return o;
  }

}  // namespace

int main() {
  report("C1", "square-root characterization of (A3)", characterization(false));
  report("C2", "idempotent characterization of (A2)", characterization(true));
  report("C3", "structural forms of A2 and A3 members", structural_forms());
  report("C4", "H-classes of idempotents and left zero subsets in P(S)", h_classes());

  SweepResult s = sweep();
  std::string const volume = std::to_string(s.instances) + " psi (" + std::to_string(s.searched) + " from search), "
                             + std::to_string(s.secs) + " s";
  if (s.instances < min_psi_instances) {
    s.theta.fail("only " + std::to_string(s.instances) + " psi instances");
  }
  if (!s.left_zero_mover) {
    s.theta.fail("no psi on a left zero semigroup moves a singleton");
  }
  if (s.secs >= sweep_secs) {
    s.eta.fail("took " + std::to_string(s.secs) + " s");
  }
  std::size_t covered = 0;
  for (auto const& id : statement_ids()) {
    if (s.coverage[id] == 0) {
      s.suite.fail("statement " + id + " never instantiated");
    } else {
      ++covered;
    }
  }
  s.theta.detail = volume;
  s.eta.detail   = volume;
  s.suite.detail = std::to_string(covered) + "/" + std::to_string(statement_ids().size()) + " statements instantiated";
  report("C5", "theta is a semilattice isomorphism matching components", s.theta);
  report("C6", "eta is an isomorphism S -> S'", s.eta);
  report("C7", "statement suite", s.suite);

  report("C8", "EP and A3 at order 12", performance());
  report("C9", "verification reports are byte-identical", determinism());
  return failures == 0 ? 0 : 1;
}
