#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "crglobal/breakable.hpp"
#include "crglobal/families.hpp"
#include "crglobal/globaldet.hpp"
#include "crglobal/table_io.hpp"
#include "crglobal/verify.hpp"

using namespace crglobal;

namespace {

  constexpr int exit_ok           = 0;
  constexpr int exit_not_found    = 1;
  constexpr int exit_operational  = 2;
  constexpr int exit_falsified    = 3;

  std::string elements_of(std::vector<elem_t> const& v, CayleyTable const& S) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? "," : "") + S.label(v[i]);
    }
    return out + "}";
  }

  std::string kind_of(CayleyTable const& S) {
    if (S.order() == 1) {
      return "trivial";
    }
    if (is_left_zero(S)) {
      return "left zero";
    }
    if (is_right_zero(S)) {
      return "right zero";
    }
    if (is_band(S)) {
      return is_commutative(S) ? "semilattice" : "band";
    }
    return is_commutative(S) ? "commutative" : "general";
  }

  int cmd_analyze(std::string const& path) {
    TableFile const    f = read_table_file(path);
    CayleyTable const& S = f.table;
    GreenData const    g = green_relations(S);
    std::cout << "name: " << f.name << "\n";
    std::cout << "order: " << S.order() << "\n";
    std::cout << "type: " << kind_of(S) << "\n";
    std::cout << "idempotents: " << elements_of(S.idempotents(), S) << "\n";
    std::cout << "green: L " << g.number_of_l_classes() << ", R " << g.number_of_r_classes() << ", H "
              << g.number_of_h_classes() << ", D " << g.number_of_d_classes() << "\n";
    bool const cr = is_completely_regular(g);
    std::cout << "completely regular: " << (cr ? "yes" : "no") << "\n";
    if (!cr) {
      return exit_ok;
    }
    std::cout << "completely simple: " << (is_completely_simple(S) ? "yes" : "no") << "\n";
    Decomposition const D = decompose(S);
    std::cout << "components: |Y|=" << D.number_of_components() << "\n";
    for (comp_t alpha = 0; alpha < D.number_of_components(); ++alpha) {
      std::cout << "  S_" << alpha << " = " << elements_of(D.components[alpha], S) << "  "
                << to_string(D.classification[alpha]) << "  below:";
      for (comp_t beta = 0; beta < D.number_of_components(); ++beta) {
        if (D.less(beta, alpha)) {
          std::cout << " S_" << beta;
        }
      }
      std::cout << "\n";
    }
    NaturalOrder const      order = natural_order(S);
    std::vector<elem_t>     maximal;
    for (elem_t a = 0; a < S.order(); ++a) {
      if (order.maximal[a]) {
        maximal.push_back(a);
      }
    }
    std::cout << "maximal: " << elements_of(maximal, S) << "\n";
    if (D.number_of_components() == 1 && S.order() > 1) {
      std::cout << kind_of(S) << ", |Y|=1\n";
    }
    return exit_ok;
  }

  void require_cr(CayleyTable const& S, std::string const& what) {
    if (!is_completely_regular(S)) {
      throw error(error_kind::not_completely_regular, what + " is not completely regular");
    }
  }

  void require_bound(CayleyTable const& S, std::size_t bound) {
    if (S.order() > bound) {
      throw error(error_kind::order_too_large,
                  "order " + std::to_string(S.order()) + " exceeds --max-order " + std::to_string(bound));
    }
  }

  int cmd_breakable(std::string const& path, std::size_t bound) {
    TableFile const    f = read_table_file(path);
    CayleyTable const& S = f.table;
    require_cr(S, f.name);
    require_bound(S, bound);
    PowerSemigroup const P(S);
    auto const           a3    = enumerate_a3(P, bound);
    auto const           a2    = enumerate_a2(P, bound);
    auto const           a2bar = enumerate_a2bar(P, bound);
    bool                 agree = true;

    std::cout << "A3: " << a3.size() << "\n";
    for (auto const& A : a3) {
      BreakableForm const F   = structural_form(P, A);
      bool const          c3  = a3_characterization(P, A, bound).holds;
      bool const          c2  = a2_characterization(P, A, bound).holds;
      bool const          ok  = c3 && c2 == is_a2(P, A.mask()) && verify_form(P, A, F);
      agree                   = agree && ok;
      std::cout << "  " << A.to_string() << "  form:";
      for (std::size_t i = 0; i < F.chain.size(); ++i) {
        std::cout << " " << F.chain[i].to_string() << ":" << to_string(F.kinds[i]);
      }
      std::cout << "  " << (F.is_breakable() ? "breakable" : "group top") << "  check: " << (ok ? "ok" : "MISMATCH")
                << "\n";
    }
    std::cout << "A2: " << a2.size() << "\n";
    for (auto const& A : a2) {
      std::cout << "  " << A.to_string() << "\n";
    }
    std::cout << "A2bar: " << a2bar.size() << "\n";
    for (auto const& A : a2bar) {
      std::cout << "  " << A.to_string() << "\n";
    }
    return agree ? exit_ok : exit_falsified;
  }

  int cmd_globiso(std::string const& left,
                  std::string const& right,
                  std::size_t        limit,
                  std::string const& emit_eta,
                  std::size_t        bound) {
    TableFile const fs = read_table_file(left);
    TableFile const ft = read_table_file(right);
    require_cr(fs.table, fs.name);
    require_cr(ft.table, ft.name);
    require_bound(fs.table, bound);
    require_bound(ft.table, bound);
    if (fs.table.order() != ft.table.order()) {
      std::cout << "no psi: |P(S)| != |P(S')|\n";
      return exit_not_found;
    }
    NamedTable const S{fs.name, fs.table};
    NamedTable const T{ft.name, ft.table};
    auto const       psis = psi_candidates(S, T, limit);
    if (psis.empty()) {
      std::cout << "no psi: P(" << S.name << ") and P(" << T.name << ") are not isomorphic\n";
      return exit_not_found;
    }
    PowerSemigroup const P(S.table);
    PowerSemigroup const Q(T.table);
    nlohmann::ordered_json etas = nlohmann::ordered_json::array();
    bool                   failed = false;
    for (auto const& inst : psis) {
      GlobalIso const g(P, Q, inst.psi);
      auto const      results = verify_statement_suite(g, bound);
      std::size_t     bad     = 0;
      for (auto const& r : results) {
        if (!r.pass) {
          ++bad;
          std::cout << "  FAIL " << r.id << ": " << r.witness << "\n";
        }
      }
      failed = failed || bad > 0;
      std::cout << inst.name << (inst.from_search ? " (search)" : " (lift)")
                << (moves_a_singleton(inst.psi, S.table.order()) ? " moves singletons" : "") << ": "
                << results.size() - bad << "/" << results.size() << " statements pass\n";
      if (bad == 0) {
        IsoMap const eta = construct_eta(g);
        std::cout << "  eta:";
        for (elem_t a = 0; a < eta.size(); ++a) {
          std::cout << " " << S.table.label(a) << "->" << T.table.label(eta(a));
        }
        std::cout << "\n";
        nlohmann::ordered_json e;
        e["psi"] = inst.name;
        e["eta"] = eta.forward;
        etas.push_back(e);
      }
    }
    if (!emit_eta.empty()) {
      std::ofstream out(emit_eta, std::ios::binary);
      if (!out) {
        throw error(error_kind::parse_error, "cannot write " + emit_eta);
      }
      out << etas.dump(2) << "\n";
    }
    return failed ? exit_falsified : exit_ok;
  }

  int cmd_verify(std::string const& prof, std::string const& output) {
    VerifyOptions opts;
    opts.prof    = prof == "quick" ? profile::quick : profile::full;
    opts.corrupt = corrupt_from_env();
    Report const report = run_verification(opts);
    if (output.empty()) {
      std::cout << report.to_jsonl();
      std::cerr << report.summary();
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out) {
        throw error(error_kind::parse_error, "cannot write " + output);
      }
      out << report.to_jsonl();
      std::cout << report.summary();
    }
    for (auto const& r : report.records) {
      if (!r.pass) {
        std::cerr << "FAIL " << r.check << " [" << r.instance << "]: " << r.witness << "\n";
      }
    }
    if (report.falsified()) {
      return exit_falsified;
    }
    return report.all_pass() ? exit_ok : exit_not_found;
  }

  int cmd_corpus(std::string const& dir, std::string const& prof) {
    corpus_profile p = corpus_profile::full;
    if (prof == "exhaustive3") {
      p = corpus_profile::exhaustive3;
    } else if (prof == "cr-families") {
      p = corpus_profile::cr_families;
    }
    std::filesystem::create_directories(dir);
    std::size_t count = 0;
    for (auto const& m : corpus(p)) {
      write_table_file(std::filesystem::path(dir) / (m.name + ".json"), {m.name, m.table});
      ++count;
    }
    std::cout << count << " tables written to " << dir << "\n";
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power semigroups of completely regular semigroups"};
  app.require_subcommand(1);

  std::string path, left, right, emit_eta, output, prof = "full", corpus_dir, corpus_prof = "full";
  std::size_t scan_bound = default_scan_bound(12);
  std::size_t iso_bound  = default_scan_bound(5);
  std::size_t limit      = 8;
  unsigned    seed       = 0;

  auto* analyze = app.add_subcommand("analyze", "Green's relations, decomposition and natural order");
  analyze->add_option("table", path, "table file (JSON or plain text)")->required();

  auto* breakable = app.add_subcommand("breakable", "A2, A3 and A2bar with structural forms");
  breakable->add_option("table", path)->required();
  breakable->add_option("--max-order", scan_bound, "largest order scanned");

  auto* globiso = app.add_subcommand("globiso", "isomorphisms P(S) -> P(S') and the eta they determine");
  globiso->add_option("S", left)->required();
  globiso->add_option("S2", right)->required();
  globiso->add_option("--limit", limit, "psi count cap per source");
  globiso->add_option("--emit-eta", emit_eta, "write eta as JSON");
  globiso->add_option("--max-order", iso_bound, "largest order searched");

  auto* verify = app.add_subcommand("verify", "run every check over the corpus");
  verify->add_option("--profile", prof)->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--seed", seed, "reserved; runs are deterministic");
  verify->add_option("--output", output, "JSON lines file (default stdout)");

  auto* corpus_cmd = app.add_subcommand("corpus", "export the corpus as table files");
  corpus_cmd->add_option("--out", corpus_dir)->required();
  corpus_cmd->add_option("--profile", corpus_prof)->check(CLI::IsMember({"exhaustive3", "cr-families", "full"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_operational;
  }

  try {
    if (*analyze) {
      return cmd_analyze(path);
    }
    if (*breakable) {
      return cmd_breakable(path, scan_bound);
    }
    if (*globiso) {
      return cmd_globiso(left, right, limit, emit_eta, iso_bound);
    }
    if (*verify) {
      return cmd_verify(prof, output);
    }
    if (*corpus_cmd) {
      return cmd_corpus(corpus_dir, corpus_prof);
    }
  } catch (error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_falsification() ? exit_falsified : exit_operational;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_operational;
  }
  return exit_operational;
}
