#include "prym/seedio.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace prym {

namespace {

using ordered_json = nlohmann::ordered_json;

std::pair<int, int> line_column_at(const std::string& text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
  }
  return {line, col};
}

// Best-effort location of a quoted token inside the document, for error
// messages about semantically bad values.
std::pair<int, int> locate_token(const std::string& text, const std::string& token) {
  std::string quoted = "\"" + token + "\"";
  std::size_t pos = text.find(quoted);
  if (pos == std::string::npos) return {0, 0};
  return line_column_at(text, pos);
}

[[noreturn]] void fail_at(const std::string& text, const std::string& token,
                          const std::string& msg) {
  auto [line, col] = locate_token(text, token);
  throw SeedParseError(msg, line, col);
}

Permutation parse_perm_field(const std::string& text, const std::string& value,
                             int degree, const std::string& where) {
  try {
    return Permutation::parse_cycles(value, degree);
  } catch (const ParseError& e) {
    fail_at(text, value, where + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    fail_at(text, value, where + ": " + e.what());
  }
}

}  // namespace

SeedFile parse_seed_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column_at(text, e.byte > 0 ? e.byte - 1 : 0);
    throw SeedParseError(std::string("JSON error: ") + e.what(), line, col);
  }
  auto bad = [&](const std::string& msg) -> SeedParseError {
    return SeedParseError(msg, 0, 0);
  };
  if (!j.is_object()) throw bad("seed file must be a JSON object");
  if (j.value("format", std::string{}) != "prym-forge-seed")
    throw bad("missing or wrong \"format\"; expected \"prym-forge-seed\"");
  if (j.value("version", 0) != 1) throw bad("unsupported seed file version");
  if (!j.contains("degree_n") || !j["degree_n"].is_number_integer())
    throw bad("missing integer \"degree_n\"");
  if (!j.contains("base_genus") || !j["base_genus"].is_number_integer())
    throw bad("missing integer \"base_genus\"");

  SeedFile seed;
  seed.rep.degree_n = j["degree_n"].get<int>();
  seed.rep.base_genus = j["base_genus"].get<int>();
  if (seed.rep.degree_n < 3) throw bad("degree_n must be >= 3");
  if (seed.rep.base_genus < 0) throw bad("base_genus must be >= 0");
  const int d = 2 * seed.rep.degree_n;

  if (!j.contains("handles") || !j["handles"].is_array())
    throw bad("missing array \"handles\"");
  for (const auto& h : j["handles"]) {
    if (!h.is_object() || !h.contains("a") || !h.contains("b"))
      throw bad("each handle must be {\"a\": ..., \"b\": ...}");
    Permutation a = parse_perm_field(text, h["a"].get<std::string>(), d, "handle a");
    Permutation b = parse_perm_field(text, h["b"].get<std::string>(), d, "handle b");
    seed.rep.handles.emplace_back(std::move(a), std::move(b));
  }
  if (static_cast<int>(seed.rep.handles.size()) != seed.rep.base_genus)
    throw bad("handle count must equal base_genus");

  if (!j.contains("branches") || !j["branches"].is_array())
    throw bad("missing array \"branches\"");
  for (const auto& c : j["branches"]) {
    if (!c.is_string()) throw bad("branches must be cycle-notation strings");
    seed.rep.branches.push_back(
        parse_perm_field(text, c.get<std::string>(), d, "branch"));
  }

  if (j.contains("metadata") && j["metadata"].is_object()) {
    const auto& m = j["metadata"];
    if (m.contains("name")) seed.name = m["name"].get<std::string>();
    if (m.contains("notes")) seed.notes = m["notes"].get<std::string>();
  }
  return seed;
}

SeedFile load_seed_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SeedParseError("cannot open file: " + path, 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_seed_text(buf.str());
}

std::string print_seed_file(const SeedFile& seed) {
  ordered_json j;
  j["format"] = "prym-forge-seed";
  j["version"] = 1;
  j["degree_n"] = seed.rep.degree_n;
  j["base_genus"] = seed.rep.base_genus;
  j["handles"] = ordered_json::array();
  for (const auto& [a, b] : seed.rep.handles) {
    ordered_json h;
    h["a"] = a.cycle_string();
    h["b"] = b.cycle_string();
    j["handles"].push_back(std::move(h));
  }
  j["branches"] = ordered_json::array();
  for (const auto& c : seed.rep.branches) j["branches"].push_back(c.cycle_string());
  if (seed.name || seed.notes) {
    ordered_json m;
    if (seed.name) m["name"] = *seed.name;
    if (seed.notes) m["notes"] = *seed.notes;
    j["metadata"] = std::move(m);
  }
  return j.dump(2) + "\n";
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xf);
  return os.str();
}

}  // namespace prym
