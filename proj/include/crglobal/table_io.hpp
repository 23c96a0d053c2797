#pragma once

#include <filesystem>
#include <string>

#include "crglobal/table.hpp"

namespace crglobal {

  struct TableFile {
    std::string name;
    CayleyTable table;
  };

  // JSON {name?, order, table, labels?} when the text starts with '{',
  // otherwise plain text: n, then n rows of n entries. Throws parse_error for
  // malformed input and the validate_table errors for a bad table.
  TableFile parse_table(std::string const& text);

  // Throws parse_error if the file cannot be read.
  TableFile read_table_file(std::filesystem::path const& path);

  std::string to_json(TableFile const& f);
  std::string to_plain_text(CayleyTable const& S);

  void write_table_file(std::filesystem::path const& path, TableFile const& f);

}  // namespace crglobal
