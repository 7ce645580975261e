#pragma once

#include <cstdint>
#include <vector>

#include "prym/cover.hpp"

namespace prym {

// Randomized search for admissible monodromy seeds: branch loops are sampled
// as pairing-equivariant lifts of random transpositions, handles as
// sign-zero equivariant permutations, the last branch loop is solved from
// the product relation, and the candidate is kept when every validation
// predicate passes and the lift curve splits. Deterministic for a fixed
// RNG seed; candidates are evaluated in index order.
struct SearchParams {
  int n = 0;
  int base_genus = 0;
  int branch_count = 0;  // >= 2 and even
  int count = 1;
  std::uint64_t rng_seed = 0;
  long long attempt_budget = 200000;  // per requested seed
  // When set, look for admissible seeds whose sign character is nontrivial
  // (negative controls for the component criterion).
  bool require_nonsplit_sign = false;
};

struct SearchResult {
  std::vector<MonodromyRep> seeds;
  long long attempts = 0;
  bool exhausted = false;
};

SearchResult search_seeds(const SearchParams& params);

}  // namespace prym
