#include "crglobal/table_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "crglobal/error.hpp"

namespace crglobal {

  namespace {
    using json = nlohmann::json;

    TableFile parse_json(std::string const& text) {
      json doc;
      try {
        doc = json::parse(text);
      } catch (json::parse_error const& e) {
        throw error(error_kind::parse_error, e.what());
      }
      if (!doc.is_object() || !doc.contains("table")) {
        throw error(error_kind::parse_error, "expected an object with a \"table\" field");
      }
      std::vector<std::vector<long long>> grid;
      std::vector<std::string>            labels;
      TableFile                           out{doc.value("name", std::string()), {}};
      try {
        grid = doc.at("table").get<std::vector<std::vector<long long>>>();
        if (doc.contains("labels")) {
          labels = doc.at("labels").get<std::vector<std::string>>();
        }
        if (doc.contains("order") && doc.at("order").get<std::size_t>() != grid.size()) {
          throw error(error_kind::parse_error, "\"order\" does not match the table");
        }
      } catch (json::exception const& e) {
        throw error(error_kind::parse_error, e.what());
      }
      if (!labels.empty() && labels.size() != grid.size()) {
        throw error(error_kind::parse_error, "\"labels\" does not match the table");
      }
      out.table = validate_table(grid, std::move(labels));
      return out;
    }

    TableFile parse_plain(std::string const& text) {
      std::istringstream in(text);
      long long          n = 0;
      if (!(in >> n) || n <= 0) {
        throw error(error_kind::parse_error, "expected the order on the first line");
      }
      std::vector<std::vector<long long>> grid(static_cast<std::size_t>(n));
      for (auto& row : grid) {
        row.resize(static_cast<std::size_t>(n));
        for (auto& v : row) {
          if (!(in >> v)) {
            throw error(error_kind::parse_error, "table has fewer than n*n entries");
          }
        }
      }
      std::string rest;
      if (in >> rest) {
        throw error(error_kind::parse_error, "trailing input after the table: " + rest);
      }
      return {"", validate_table(grid)};
    }
  }  // namespace

  TableFile parse_table(std::string const& text) {
    auto const first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
      throw error(error_kind::parse_error, "empty input");
    }
    return text[first] == '{' ? parse_json(text) : parse_plain(text);
  }

  TableFile read_table_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw error(error_kind::parse_error, "cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    TableFile f = parse_table(buf.str());
    if (f.name.empty()) {
      f.name = path.stem().string();
    }
    return f;
  }

  std::string to_json(TableFile const& f) {
    json doc;
    if (!f.name.empty()) {
      doc["name"] = f.name;
    }
    doc["order"] = f.table.order();
    doc["table"] = f.table.grid();
    if (!f.table.labels().empty()) {
      doc["labels"] = f.table.labels();
    }
    return doc.dump() + "\n";
  }

  std::string to_plain_text(CayleyTable const& S) {
    std::ostringstream out;
    out << S.order() << "\n";
    for (elem_t a = 0; a < S.order(); ++a) {
      for (elem_t b = 0; b < S.order(); ++b) {
        out << (b ? " " : "") << S(a, b);
      }
      out << "\n";
    }
    return out.str();
  }

  void write_table_file(std::filesystem::path const& path, TableFile const& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw error(error_kind::parse_error, "cannot write " + path.string());
    }
    out << to_json(f);
  }

}  // namespace crglobal
