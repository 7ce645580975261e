#pragma once

#include <optional>
#include <string>

#include "prym/cover.hpp"

namespace prym {

// Seed files are JSON documents holding a MonodromyRep with permutations in
// cycle notation on 2n points (0..n-1 unprimed, n..2n-1 primed):
//
// {
//   "format": "prym-forge-seed",
//   "version": 1,
//   "degree_n": 4,
//   "base_genus": 0,
//   "handles": [ { "a": "...", "b": "..." }, ... ],
//   "branches": [ "(0 1)(4 5)", ... ],
//   "metadata": { "name": "...", "notes": "..." }
// }
//
// The generator order of the product relation is handles in index order,
// then branches in index order; composition is left to right.
struct SeedFile {
  MonodromyRep rep;
  std::optional<std::string> name;
  std::optional<std::string> notes;
};

struct SeedParseError : std::runtime_error {
  SeedParseError(const std::string& msg, int line_, int column_)
      : std::runtime_error(msg), line(line_), column(column_) {}
  int line = 0;
  int column = 0;
};

SeedFile parse_seed_text(const std::string& text);
SeedFile load_seed_file(const std::string& path);

// Canonical form: fixed key order, two-space indent, canonical cycle
// strings, trailing newline. parse -> print is byte-identical on canonical
// files.
std::string print_seed_file(const SeedFile& seed);

// FNV-1a 64-bit digest of raw bytes, as "fnv1a64:<hex>".
std::string content_digest(const std::string& bytes);

}  // namespace prym
