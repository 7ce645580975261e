#include "prym/search.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "prym/ngonal.hpp"

namespace prym {

namespace {

// Equivariant permutation of 2n sheets from a pair permutation and a
// crossing pattern: pair p maps to pi(p), crossing the pairing iff bit p of
// `cross` is set.
Permutation equivariant_lift(const Permutation& pi, unsigned cross) {
  const int n = pi.degree();
  std::vector<int> im(2 * n);
  for (int p = 0; p < n; ++p) {
    int c = (cross >> p) & 1u;
    im[p] = pi(p) + n * c;
    im[p + n] = pi(p) + n * (1 - c);
  }
  return Permutation(std::move(im));
}

Permutation random_pair_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(im[i], im[pick(rng)]);
  }
  return Permutation(std::move(im));
}

// Lift of a transposition with no pairing-stable cycle: two disjoint
// 2-cycles over the moved pairs, identity elsewhere.
Permutation random_branch(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  int p = pick(rng), q = pick(rng);
  while (q == p) q = pick(rng);
  std::uniform_int_distribution<int> coin(0, 1);
  int t = coin(rng);
  std::vector<int> im(2 * n);
  for (int i = 0; i < 2 * n; ++i) im[i] = i;
  int qa = q + n * t, qb = q + n * (1 - t);
  im[p] = qa;
  im[qa] = p;
  im[p + n] = qb;
  im[qb] = p + n;
  return Permutation(std::move(im));
}

bool is_valid_branch(const Permutation& c, int n) {
  // pair action a transposition, sheets a double 2-cycle straddling the
  // pairing
  int moved_pairs = 0, moved_sheets = 0;
  for (int p = 0; p < n; ++p)
    if (c(p) % n != p) ++moved_pairs;
  for (int x = 0; x < 2 * n; ++x) {
    int y = c(x);
    if (y == x) continue;
    ++moved_sheets;
    if (c(y) != x) return false;      // not an involution on its support
    if (y % n == x % n) return false; // pairing-stable 2-cycle
  }
  return moved_pairs == 2 && moved_sheets == 4;
}

}  // namespace

SearchResult search_seeds(const SearchParams& params) {
  const int n = params.n;
  const int g = params.base_genus;
  const int b = params.branch_count;
  if (n < 3 || n > kMaxLiftDegree)
    throw std::invalid_argument("search: degree n out of supported range");
  if (g < 0) throw std::invalid_argument("search: base genus must be >= 0");
  if (b < 2 || b % 2 != 0)
    throw std::invalid_argument(
        "search: branch count must be even and >= 2 (odd counts make the "
        "ramification degree odd)");
  if (params.count < 1) throw std::invalid_argument("search: count must be >= 1");
  if (params.require_nonsplit_sign && g == 0)
    throw std::invalid_argument(
        "search: branch loops always have sign zero; nontrivial sign "
        "characters need base genus >= 1");

  std::mt19937_64 rng(params.rng_seed);
  std::uniform_int_distribution<unsigned> cross_bits(0, (1u << n) - 1);

  SearchResult result;
  const long long budget =
      params.attempt_budget * static_cast<long long>(params.count);
  while (static_cast<int>(result.seeds.size()) < params.count &&
         result.attempts < budget) {
    ++result.attempts;

    MonodromyRep rep;
    rep.degree_n = n;
    rep.base_genus = g;
    bool sign_seen = false;
    for (int i = 0; i < g; ++i) {
      // handles: even crossing patterns keep the sign character adjustable
      unsigned ca = cross_bits(rng), cb = cross_bits(rng);
      if (!params.require_nonsplit_sign) {
        if (std::popcount(ca) % 2) ca ^= 1u;
        if (std::popcount(cb) % 2) cb ^= 1u;
      }
      sign_seen = sign_seen || (std::popcount(ca) % 2) || (std::popcount(cb) % 2);
      rep.handles.emplace_back(equivariant_lift(random_pair_permutation(n, rng), ca),
                               equivariant_lift(random_pair_permutation(n, rng), cb));
    }
    if (params.require_nonsplit_sign && !sign_seen) continue;

    for (int j = 0; j < b - 1; ++j) rep.branches.push_back(random_branch(n, rng));

    // solve the last branch loop from the product relation
    CoverAction partial = to_cover_action(rep);  // b-1 branches so far
    Permutation prefix = relation_product(partial);
    Permutation last = prefix.inverse();
    if (!is_valid_branch(last, n)) continue;
    rep.branches.push_back(std::move(last));

    ValidationReport v = validate(rep);
    if (!v.admissible()) continue;

    std::vector<int> signs = sign_character(rep);
    bool nontrivial = std::any_of(signs.begin(), signs.end(),
                                  [](int s) { return s != 0; });
    if (params.require_nonsplit_sign != nontrivial) continue;

    if (!params.require_nonsplit_sign) {
      // emitted seeds guarantee a split lift curve
      SplitReport sr = split(lift_action(rep));
      if (!sr.split || !sr.parity_components) continue;
    }
    result.seeds.push_back(std::move(rep));
  }
  result.exhausted = static_cast<int>(result.seeds.size()) < params.count;
  return result;
}

}  // namespace prym
