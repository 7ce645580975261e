#pragma once

#include <functional>
#include <string>
#include <vector>

#include "prym/corresp.hpp"
#include "prym/cover.hpp"
#include "prym/intmat.hpp"

namespace prym {

// CW model of the closed surface of a connected cover of Y, built over the
// one-vertex base complex with edges a_1,b_1,...,a_g,b_g,c_1,...,c_b, one
// big 2-cell along the relation word and one disk 2-cell per branch loop.
// Upstairs: vertices = fiber points, edges = (base edge, point), big cells =
// lifts of the relation disk (one per point, closed because the relation
// holds), disk cells = one per cycle of each branch generator.
//
// The ribbon structure (cyclic order of edge ends at each vertex) is the
// lift of the base vertex rotation; it orients the surface and is what the
// intersection form is computed from.
struct SurfaceComplex {
  CoverAction action;
  int points = 0;
  int base_edge_count = 0;  // 2g + b

  // Edge (k, x) runs from x to g_k(x); id = k*points + x.
  int edge_count() const { return base_edge_count * points; }
  int edge_id(int k, int x) const { return k * points + x; }
  int edge_base(int e) const { return e / points; }
  int edge_tail(int e) const { return e % points; }
  int edge_head(int e) const { return action.generators[edge_base(e)](edge_tail(e)); }

  // Darts: 2 per edge; (2k, x) leaves x forward along edge (k, x),
  // (2k+1, y) leaves y backward along edge (k, g_k^-1(y)).
  // id = base_dart*points + point.
  int dart_count() const { return 2 * edge_count(); }
  std::vector<int> rot_next;  // vertex rotation successor per dart

  // Faces as cyclic dart lists (big cells first, then disk cells).
  std::vector<std::vector<int>> faces;
  int big_cell_count = 0;

  long long euler() const;
  long long genus() const { return (2 - euler()) / 2; }

  // Signed edge boundary of face f (column of the boundary matrix d2).
  std::vector<std::pair<int, long long>> face_boundary(int f) const;
  // d1 of an edge-chain vector; zero exactly on cycles.
  bool is_cycle(const IntVec& edge_vec) const;

  IntMat boundary1() const;  // vertices x edges
  IntMat boundary2() const;  // edges x faces
};

// Throws if the action is disconnected or the relation fails.
SurfaceComplex build_complex(const CoverAction& action);

// Basis of H1 with the (skew, unimodular) intersection matrix. The sign of
// the form depends on the chosen global orientation; everything downstream
// is invariant under flipping it.
struct H1Lattice {
  long long genus = 0;
  int rank() const { return static_cast<int>(2 * genus); }
  IntMat form;                       // E: rank x rank, skew, |det| = 1
  std::vector<IntVec> basis_cycles;  // basis elements in the edge space

  // coordinate machinery (loop space of the tree-contracted ribbon graph)
  std::vector<int> loop_of_edge;  // -1 for spanning-tree edges
  std::vector<int> loop_edges;    // loop id -> edge id
  IntMat proj;                    // row transform of the face matrix SNF
  int proj_rank = 0;

  // Coordinates of a 1-cycle in the chosen basis.
  IntVec coords_of_cycle(const SurfaceComplex& cx, const IntVec& edge_vec) const;
};

H1Lattice h1_with_form(const SurfaceComplex& cx);

// Induced map on H1 of an equivariant automorphism of the fiber
// (in particular of an involution such as the pairing or the complement).
IntMat involution_matrix(const SurfaceComplex& cx, const H1Lattice& h1,
                         const std::vector<int>& point_map);

// Induced map H1(from) -> H1(to) of a correspondence acting fiberwise:
// edge (k, x) maps to the sum of edges (k, y) over y in rule(x). This is
// transfer along the left projection followed by pushforward along the
// right one, with the incidence curve contracted out. The rule must be
// equivariant.
IntMat correspondence_matrix(const SurfaceComplex& cx_from, const H1Lattice& h1_from,
                             const SurfaceComplex& cx_to, const H1Lattice& h1_to,
                             const std::function<std::vector<int>(int)>& rule);

// A covering of covers of Y: a point map commuting with all generators,
// with constant fiber size.
struct CoveringMap {
  const SurfaceComplex* total = nullptr;
  const SurfaceComplex* base = nullptr;
  std::vector<int> down;  // total point -> base point
  int degree = 0;
};

CoveringMap make_covering(const SurfaceComplex& total, const SurfaceComplex& base,
                          const std::vector<int>& down);

IntVec pushforward(const CoveringMap& cov, const IntVec& total_edge_vec);
IntVec transfer(const CoveringMap& cov, const IntVec& base_edge_vec);

// Anti-invariant (Prym) lattice of an involution on H1: the saturated kernel
// of 1 + sigma_*, with the restricted pairing and its half.
struct PrymLattice {
  int rank = 0;
  IntMat basis;            // columns: lattice basis in H1 coordinates
  IntMat restricted_form;  // E restricted to the lattice
  IntMat halved_form;      // restricted_form / 2
  bool form_even = false;
  bool halved_unimodular = false;
  Int halved_det;
  // diagnostic: index of the image of (1 - sigma_*) inside the kernel lattice
  Int image_index;
};

PrymLattice prym_lattice(const H1Lattice& h1, const IntMat& sigma_star);

// Restriction of a map between the ambient H1's to Prym sublattices;
// nullopt when the image leaves the target lattice.
std::optional<IntMat> restrict_map(const IntMat& m, const PrymLattice& from,
                                   const PrymLattice& to);

struct Verdict {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Full lattice verification for one n-gonal seed (n even): the two Prym
// lattices, the correspondence-induced maps, adjointness, and the isogeny
// identities. For n = 4 this includes the multiplication-by-2 factorization
// and the induced unimodular pairing-preserving map.
struct IsogenyPackage {
  int n = 0;
  long long genus_X = 0, genus_Xt = 0, genus_C1t = 0, genus_C1 = 0;
  PrymLattice prym_kappa;  // from Xtilde with the pairing involution
  PrymLattice prym_tau1;   // from Ctilde_1 with the complement involution
  IntMat s_star, st_star;      // on the ambient H1's
  IntMat s_restricted, st_restricted;  // between the Prym lattices
  IntMat psi;                  // s_restricted / 2 (n = 4 only)
  std::vector<Verdict> verdicts;
  bool all_passed() const;
};

IsogenyPackage verify_isogeny_package(const MonodromyRep& rep);

}  // namespace prym
