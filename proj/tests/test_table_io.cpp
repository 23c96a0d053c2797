#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "crglobal/table_io.hpp"
#include "fixtures.hpp"

using namespace crglobal;
using fixtures::error_of;

TEST_CASE("parse JSON and plain text") {
  TableFile const j = parse_table(R"({"name": "L2", "order": 2, "table": [[0, 0], [1, 1]], "labels": ["a", "b"]})");
  CHECK(j.name == "L2");
  CHECK(j.table == validate_table({{0, 0}, {1, 1}}));
  CHECK(j.table.label(1) == "b");

  TableFile const p = parse_table("  2\n0 1\n1 0\n");
  CHECK(p.name.empty());
  CHECK(p.table == validate_table({{0, 1}, {1, 0}}));
  CHECK(parse_table(R"({"table": [[0]]})").table.order() == 1);
}

TEST_CASE("parse errors") {
  CHECK(error_of([] { parse_table(""); }) == error_kind::parse_error);
  CHECK(error_of([] { parse_table("{ not json"); }) == error_kind::parse_error);
  CHECK(error_of([] { parse_table(R"({"order": 2})"); }) == error_kind::parse_error);
  CHECK(error_of([] { parse_table(R"({"order": 3, "table": [[0, 0], [1, 1]]})"); }) == error_kind::parse_error);
  CHECK(error_of([] { parse_table(R"({"table": [[0, 0], [1, 1]], "labels": ["a"]})"); }) == error_kind::parse_error);
  CHECK(error_of([] { parse_table(R"({"table": "no"})"); }) == error_kind::parse_error);
  CHECK(error_of([] { parse_table("2\n0 1\n1"); }) == error_kind::parse_error);
  CHECK(error_of([] { parse_table("2\n0 1\n1 0\n7"); }) == error_kind::parse_error);
  CHECK(error_of([] { parse_table("x"); }) == error_kind::parse_error);
  CHECK(error_of([] { parse_table("2\n1 0\n0 0\n"); }) == error_kind::not_associative);
  CHECK(error_of([] { parse_table(R"({"table": [[0, 5], [1, 1]]})"); }) == error_kind::out_of_range);
  CHECK(error_of([] { read_table_file("/nonexistent/table.json"); }) == error_kind::parse_error);
}

TEST_CASE("every corpus member round-trips") {
  for (auto const& m : fixtures::full_corpus()) {
    CAPTURE(m.name);
    TableFile const j = parse_table(to_json({m.name, m.table}));
    CHECK(j.name == m.name);
    CHECK(j.table == m.table);
    CHECK(j.table.labels() == m.table.labels());
    CHECK(parse_table(to_plain_text(m.table)).table == m.table);
  }
}

TEST_CASE("files") {
  auto const dir = std::filesystem::temp_directory_path() / "crglobal-table-io-test";
  std::filesystem::create_directories(dir);
  CayleyTable const& S = fixtures::named("clifford3");
  write_table_file(dir / "c3.json", {"clifford3", S});
  TableFile const back = read_table_file(dir / "c3.json");
  CHECK(back.name == "clifford3");
  CHECK(back.table == S);

  {
    std::ofstream out(dir / "plain.txt");
    out << to_plain_text(S);
  }
  TableFile const plain = read_table_file(dir / "plain.txt");
  CHECK(plain.name == "plain");
  CHECK(plain.table == S);
  std::filesystem::remove_all(dir);
}
