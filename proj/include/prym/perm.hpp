#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace prym {

// Error with a character offset into the offending text.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg), offset(off) {}
  std::size_t offset = 0;
};

// A permutation of {0, ..., d-1}, stored as its image table.
//
// Composition convention, fixed project-wide: compose(p, q) applies p first,
// then q. Words in generators therefore read left to right, which is the
// convention the monodromy product relation depends on.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  // Cycle notation, e.g. "(0 1)(2 3)"; fixed points omitted; "()" is the
  // identity. Points are whitespace-separated.
  static Permutation parse_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  // Canonical form: cycles sorted by smallest element, each cycle rotated so
  // its smallest element comes first. Round-trips through parse_cycles.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);
// w^-1 p w (apply w^-1, then p, then w).
Permutation conjugate(const Permutation& p, const Permutation& w);

struct CycleType {
  std::vector<int> parts;  // sorted descending; sums to the degree
  std::string to_string() const;
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Permutation& p);

// All cycles including fixed points, each cycle starting at its smallest
// element, cycles ordered by smallest element.
std::vector<std::vector<int>> cycles_of(const Permutation& p);

// Orbit partition of {0,...,degree-1} under the generated group. Orbits are
// ordered by smallest element and sorted internally.
std::vector<std::vector<int>> orbits(const std::vector<Permutation>& gens,
                                     int degree);

// orbit id per point; ids follow the ordering of orbits().
std::vector<int> orbit_index(const std::vector<Permutation>& gens, int degree);

}  // namespace prym
