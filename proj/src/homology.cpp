#include "prym/homology.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace prym {

namespace {

// One-vertex base complex in the oriented-map formalism: darts 2k (edge k
// forward) and 2k+1 (backward), vertex rotation sigma, edge involution
// alpha(d) = d^1, face successor F = sigma o alpha (cross the edge, then one
// rotation step). The faces are the relation polygon and a one-gon per
// branch loop; sigma is solved as F o alpha and must come out as a single
// cycle (one vertex).
struct BaseRibbon {
  int m = 0;
  std::vector<int> rot;  // sigma on 2m darts
};

BaseRibbon base_ribbon(int genus, int branches) {
  const int m = 2 * genus + branches;
  if (m < 2)
    throw std::invalid_argument("surface complex: base needs 2g + b >= 2");
  std::vector<std::pair<int, int>> rel;  // (edge, sign)
  for (int i = 0; i < genus; ++i) {
    rel.push_back({2 * i, +1});
    rel.push_back({2 * i + 1, +1});
    rel.push_back({2 * i, -1});
    rel.push_back({2 * i + 1, -1});
  }
  for (int j = 0; j < branches; ++j) rel.push_back({2 * genus + j, +1});

  auto dart = [](std::pair<int, int> l) { return 2 * l.first + (l.second < 0 ? 1 : 0); };
  const int nd = 2 * m;
  std::vector<int> face_next(nd, -1);
  for (std::size_t t = 0; t < rel.size(); ++t)
    face_next[dart(rel[t])] = dart(rel[(t + 1) % rel.size()]);
  for (int j = 0; j < branches; ++j) {
    int d = 2 * (2 * genus + j) + 1;
    face_next[d] = d;
  }
  BaseRibbon base;
  base.m = m;
  base.rot.resize(nd);
  for (int d = 0; d < nd; ++d) {
    if (face_next[d] < 0)
      throw std::logic_error("base ribbon: face permutation incomplete");
    base.rot[d ^ 1] = face_next[d];  // sigma = F o alpha
  }
  // one vertex: the rotation must be a single cycle
  int seen = 0, d = 0;
  do { d = base.rot[d]; ++seen; } while (d != 0);
  if (seen != nd) throw std::logic_error("base ribbon: vertex link is not a single cycle");
  return base;
}

}  // namespace

long long SurfaceComplex::euler() const {
  return static_cast<long long>(points) - edge_count() +
         static_cast<long long>(faces.size());
}

std::vector<std::pair<int, long long>> SurfaceComplex::face_boundary(int f) const {
  std::vector<std::pair<int, long long>> out;
  for (int d : faces[f]) {
    int bd = d / points, x = d % points;
    int k = bd / 2;
    if (bd % 2 == 0)
      out.push_back({edge_id(k, x), +1});
    else
      out.push_back({edge_id(k, action.generators[k].inverse()(x)), -1});
  }
  return out;
}

IntMat SurfaceComplex::boundary1() const {
  IntMat m(points, edge_count());
  for (int e = 0; e < edge_count(); ++e) {
    m.at(edge_head(e), e) += 1;
    m.at(edge_tail(e), e) -= 1;
  }
  return m;
}

IntMat SurfaceComplex::boundary2() const {
  IntMat m(edge_count(), static_cast<int>(faces.size()));
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    for (auto [e, c] : face_boundary(f)) m.at(e, f) += c;
  return m;
}

bool SurfaceComplex::is_cycle(const IntVec& edge_vec) const {
  if (static_cast<int>(edge_vec.size()) != edge_count())
    throw std::invalid_argument("is_cycle: wrong edge-space dimension");
  IntVec vsum(points);
  for (int e = 0; e < edge_count(); ++e) {
    if (edge_vec[e] == 0) continue;
    vsum[edge_head(e)] += edge_vec[e];
    vsum[edge_tail(e)] -= edge_vec[e];
  }
  for (const Int& v : vsum)
    if (v != 0) return false;
  return true;
}

SurfaceComplex build_complex(const CoverAction& action) {
  if (static_cast<int>(action.generators.size()) !=
      2 * action.base_genus + action.branch_count)
    throw std::invalid_argument("build_complex: generator count mismatch");
  if (!relation_product(action).is_identity())
    throw std::invalid_argument("build_complex: product relation violated");
  if (orbits(action.generators, action.point_count).size() != 1)
    throw std::invalid_argument(
        "build_complex: disconnected action; select a component first");

  BaseRibbon base = base_ribbon(action.base_genus, action.branch_count);
  SurfaceComplex cx;
  cx.action = action;
  cx.points = action.point_count;
  cx.base_edge_count = base.m;

  const int pts = cx.points;
  const int nd = cx.dart_count();
  cx.rot_next.resize(nd);
  for (int bd = 0; bd < 2 * base.m; ++bd)
    for (int x = 0; x < pts; ++x)
      cx.rot_next[bd * pts + x] = base.rot[bd] * pts + x;

  // face successor F = sigma o alpha; its orbits are the lifted faces
  std::vector<Permutation> gen_inv;
  for (const auto& g : cx.action.generators) gen_inv.push_back(g.inverse());
  auto alpha = [&](int d) {
    int bd = d / pts, x = d % pts, k = bd / 2;
    if (bd % 2 == 0) return (2 * k + 1) * pts + cx.action.generators[k](x);
    return (2 * k) * pts + gen_inv[k](x);
  };

  std::vector<char> done(nd, 0);
  std::vector<std::vector<int>> disk_faces;
  for (int d0 = 0; d0 < nd; ++d0) {
    if (done[d0]) continue;
    std::vector<int> face;
    int d = d0;
    do {
      done[d] = 1;
      face.push_back(d);
      d = cx.rot_next[alpha(d)];
    } while (d != d0);
    int bd = face[0] / pts;
    bool disk = (bd % 2 == 1) && (bd / 2 >= 2 * action.base_genus);
    if (disk)
      disk_faces.push_back(std::move(face));
    else
      cx.faces.push_back(std::move(face));
  }
  cx.big_cell_count = static_cast<int>(cx.faces.size());
  for (auto& f : disk_faces) cx.faces.push_back(std::move(f));

  if (cx.big_cell_count != pts)
    throw std::logic_error("build_complex: wrong number of relation cells");
  long long expected_disks = 0;
  for (int j = 0; j < action.branch_count; ++j)
    expected_disks += static_cast<long long>(cycles_of(action.branch(j)).size());
  if (static_cast<long long>(cx.faces.size()) - cx.big_cell_count != expected_disks)
    throw std::logic_error("build_complex: wrong number of disk cells");
  if ((cx.euler() & 1LL) != 0 || cx.genus() < 0)
    throw std::logic_error("build_complex: Euler characteristic is not of a surface");
  return cx;
}

namespace {

struct TreeData {
  std::vector<char> tree_edge;     // per edge
  std::vector<int> order;          // tree edges in BFS discovery order
  std::vector<IntVec> root_path;   // per vertex: chain from vertex to root
};

TreeData spanning_tree(const SurfaceComplex& cx) {
  const int pts = cx.points;
  TreeData td;
  td.tree_edge.assign(cx.edge_count(), 0);
  td.root_path.assign(pts, {});
  std::vector<char> visited(pts, 0);
  std::vector<Permutation> gen_inv;
  for (const auto& g : cx.action.generators) gen_inv.push_back(g.inverse());

  std::deque<int> queue{0};
  visited[0] = 1;
  td.root_path[0].assign(cx.edge_count(), Int(0));
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < cx.action.generators.size(); ++k) {
      int kk = static_cast<int>(k);
      // forward: edge (k,u) from u to v
      int v = cx.action.generators[k](u);
      int e = cx.edge_id(kk, u);
      if (!visited[v]) {
        visited[v] = 1;
        td.tree_edge[e] = 1;
        td.order.push_back(e);
        td.root_path[v] = td.root_path[u];
        td.root_path[v][e] -= 1;  // v -> u runs against the edge
        queue.push_back(v);
      }
      // backward: edge (k,w) from w to u
      int w = gen_inv[k](u);
      int e2 = cx.edge_id(kk, w);
      if (!visited[w]) {
        visited[w] = 1;
        td.tree_edge[e2] = 1;
        td.order.push_back(e2);
        td.root_path[w] = td.root_path[u];
        td.root_path[w][e2] += 1;  // w -> u runs along the edge
        queue.push_back(w);
      }
    }
  }
  for (int x = 0; x < pts; ++x)
    if (!visited[x]) throw std::logic_error("spanning_tree: complex not connected");
  return td;
}

}  // namespace

H1Lattice h1_with_form(const SurfaceComplex& cx) {
  const int pts = cx.points;
  const int ecount = cx.edge_count();
  const int nd = cx.dart_count();
  TreeData td = spanning_tree(cx);

  // contract the spanning tree inside the rotation system
  std::vector<int> next = cx.rot_next, prev(nd);
  for (int d = 0; d < nd; ++d) prev[next[d]] = d;
  std::vector<char> alive(nd, 1);
  for (int e : td.order) {
    int k = cx.edge_base(e), x = cx.edge_tail(e);
    int d1 = (2 * k) * pts + x;
    int d2 = (2 * k + 1) * pts + cx.edge_head(e);
    int s1 = next[d1], p1 = prev[d1], s2 = next[d2], p2 = prev[d2];
    if (s1 == d1 || s2 == d2)
      throw std::logic_error("h1: degenerate vertex during contraction");
    next[p1] = s2;
    prev[s2] = p1;
    next[p2] = s1;
    prev[s1] = p2;
    alive[d1] = alive[d2] = 0;
  }

  // single remaining vertex: read off the rotation
  const int alive_count = nd - 2 * (pts - 1);
  std::vector<int> pos(nd, -1);
  int start = -1;
  for (int d = 0; d < nd; ++d)
    if (alive[d]) { start = d; break; }
  if (start < 0) throw std::logic_error("h1: no darts left after contraction");
  {
    int d = start, cnt = 0;
    do {
      pos[d] = cnt++;
      d = next[d];
    } while (d != start);
    if (cnt != alive_count)
      throw std::logic_error("h1: contracted rotation is not a single cycle");
  }

  H1Lattice h1;
  h1.loop_of_edge.assign(ecount, -1);
  for (int e = 0; e < ecount; ++e) {
    if (td.tree_edge[e]) continue;
    h1.loop_of_edge[e] = static_cast<int>(h1.loop_edges.size());
    h1.loop_edges.push_back(e);
  }
  const int nl = static_cast<int>(h1.loop_edges.size());

  // pairing of loop classes from the rotation: each loop enters the vertex
  // at its backward dart and leaves at its forward dart; two loops cross
  // once iff their marks interleave, with the sign fixed by the cyclic order
  auto between = [&](int a1, int x, int a2) {
    int len = alive_count;
    int rx = ((x - a1) % len + len) % len;
    int r2 = ((a2 - a1) % len + len) % len;
    return rx > 0 && rx < r2;
  };
  IntMat B(nl, nl);
  std::vector<int> mark_in(nl), mark_out(nl);
  for (int a = 0; a < nl; ++a) {
    int e = h1.loop_edges[a];
    int k = cx.edge_base(e);
    mark_out[a] = pos[(2 * k) * pts + cx.edge_tail(e)];
    mark_in[a] = pos[(2 * k + 1) * pts + cx.edge_head(e)];
  }
  for (int a = 0; a < nl; ++a) {
    for (int b = a + 1; b < nl; ++b) {
      bool in1 = between(mark_in[a], mark_in[b], mark_out[a]);
      bool in2 = between(mark_in[a], mark_out[b], mark_out[a]);
      int s = 0;
      if (in1 != in2) s = in1 ? +1 : -1;
      B.at(a, b) = s;
      B.at(b, a) = -s;
    }
  }

  // face boundaries in loop coordinates
  IntMat M(nl, static_cast<int>(cx.faces.size()));
  for (int f = 0; f < static_cast<int>(cx.faces.size()); ++f)
    for (auto [e, c] : cx.face_boundary(f))
      if (h1.loop_of_edge[e] >= 0) M.at(h1.loop_of_edge[e], f) += c;

  SmithDecomposition sd = smith_normal_form(M);
  for (const Int& inv : sd.invariants)
    if (inv != 1)
      throw std::logic_error("h1: torsion in the cycle quotient; not a closed "
                             "orientable surface complex");
  const long long genus = cx.genus();
  const int rank = nl - sd.rank;
  if (rank != 2 * genus)
    throw std::logic_error("h1: rank mismatch against Riemann-Hurwitz genus");

  h1.genus = genus;
  h1.proj = sd.P;
  h1.proj_rank = sd.rank;

  // basis in loop coordinates: trailing columns of Pinv
  std::vector<IntVec> loop_basis;
  for (int j = sd.rank; j < nl; ++j) loop_basis.push_back(sd.Pinv.col(j));

  // intersection form via bilinearity over the loop generators
  h1.form = IntMat(rank, rank);
  for (int i = 0; i < rank; ++i) {
    IntVec Bu = B * loop_basis[i];
    for (int j = 0; j < rank; ++j) h1.form.at(j, i) = dot(loop_basis[j], Bu);
  }
  Int fdet = det(h1.form);
  if (fdet != 1 && fdet != -1)
    throw std::logic_error("h1: intersection form is not unimodular");

  // basis cycles in the full edge space via fundamental cycles of the loops
  for (int i = 0; i < rank; ++i) {
    IntVec z(ecount);
    for (int a = 0; a < nl; ++a) {
      const Int& c = loop_basis[i][a];
      if (c == 0) continue;
      int e = h1.loop_edges[a];
      z[e] += c;
      const IntVec& ph = td.root_path[cx.edge_head(e)];
      const IntVec& pt = td.root_path[cx.edge_tail(e)];
      for (int t = 0; t < ecount; ++t) {
        if (ph[t] != 0) z[t] += c * ph[t];
        if (pt[t] != 0) z[t] -= c * pt[t];
      }
    }
    if (!cx.is_cycle(z)) throw std::logic_error("h1: basis vector is not a cycle");
    h1.basis_cycles.push_back(std::move(z));
  }
  return h1;
}

IntVec H1Lattice::coords_of_cycle(const SurfaceComplex& cx, const IntVec& edge_vec) const {
  if (!cx.is_cycle(edge_vec))
    throw std::invalid_argument("coords_of_cycle: chain is not a cycle");
  IntVec y(loop_edges.size());
  for (std::size_t a = 0; a < loop_edges.size(); ++a) y[a] = edge_vec[loop_edges[a]];
  IntVec py = proj * y;
  IntVec out(rank());
  for (int i = 0; i < rank(); ++i) out[i] = py[proj_rank + i];
  return out;
}

IntMat involution_matrix(const SurfaceComplex& cx, const H1Lattice& h1,
                         const std::vector<int>& point_map) {
  if (static_cast<int>(point_map.size()) != cx.points)
    throw std::invalid_argument("involution_matrix: point map size mismatch");
  for (const auto& g : cx.action.generators)
    for (int x = 0; x < cx.points; ++x)
      if (point_map[g(x)] != g(point_map[x]))
        throw std::invalid_argument("involution_matrix: map is not equivariant");

  IntMat out(h1.rank(), h1.rank());
  for (int i = 0; i < h1.rank(); ++i) {
    IntVec z(cx.edge_count());
    const IntVec& src = h1.basis_cycles[i];
    for (int e = 0; e < cx.edge_count(); ++e) {
      if (src[e] == 0) continue;
      z[cx.edge_id(cx.edge_base(e), point_map[cx.edge_tail(e)])] += src[e];
    }
    out.set_col(i, h1.coords_of_cycle(cx, z));
  }
  return out;
}

IntMat correspondence_matrix(const SurfaceComplex& cx_from, const H1Lattice& h1_from,
                             const SurfaceComplex& cx_to, const H1Lattice& h1_to,
                             const std::function<std::vector<int>(int)>& rule) {
  if (cx_from.base_edge_count != cx_to.base_edge_count)
    throw std::invalid_argument("correspondence_matrix: base mismatch");
  IntMat out(h1_to.rank(), h1_from.rank());
  for (int i = 0; i < h1_from.rank(); ++i) {
    IntVec z(cx_to.edge_count());
    const IntVec& src = h1_from.basis_cycles[i];
    for (int e = 0; e < cx_from.edge_count(); ++e) {
      if (src[e] == 0) continue;
      int k = cx_from.edge_base(e);
      for (int y : rule(cx_from.edge_tail(e))) z[cx_to.edge_id(k, y)] += src[e];
    }
    out.set_col(i, h1_to.coords_of_cycle(cx_to, z));
  }
  return out;
}

CoveringMap make_covering(const SurfaceComplex& total, const SurfaceComplex& base,
                          const std::vector<int>& down) {
  if (static_cast<int>(down.size()) != total.points)
    throw std::invalid_argument("covering: point map size mismatch");
  if (total.base_edge_count != base.base_edge_count)
    throw std::invalid_argument("covering: base generator mismatch");
  if (total.points % base.points != 0)
    throw std::invalid_argument("covering: fiber size not constant");
  std::vector<int> fiber(base.points, 0);
  for (int x = 0; x < total.points; ++x) {
    if (down[x] < 0 || down[x] >= base.points)
      throw std::invalid_argument("covering: point map out of range");
    fiber[down[x]] += 1;
  }
  for (int f : fiber)
    if (f != total.points / base.points)
      throw std::invalid_argument("covering: fiber size not constant");
  for (std::size_t k = 0; k < total.action.generators.size(); ++k)
    for (int x = 0; x < total.points; ++x)
      if (base.action.generators[k](down[x]) != down[total.action.generators[k](x)])
        throw std::invalid_argument("covering: point map not equivariant");
  return {&total, &base, down, total.points / base.points};
}

IntVec pushforward(const CoveringMap& cov, const IntVec& total_edge_vec) {
  IntVec out(cov.base->edge_count());
  for (int e = 0; e < cov.total->edge_count(); ++e) {
    if (total_edge_vec[e] == 0) continue;
    out[cov.base->edge_id(cov.total->edge_base(e), cov.down[cov.total->edge_tail(e)])] +=
        total_edge_vec[e];
  }
  return out;
}

IntVec transfer(const CoveringMap& cov, const IntVec& base_edge_vec) {
  IntVec out(cov.total->edge_count());
  for (int x = 0; x < cov.total->points; ++x) {
    for (int k = 0; k < static_cast<int>(cov.total->action.generators.size()); ++k) {
      const Int& c = base_edge_vec[cov.base->edge_id(k, cov.down[x])];
      if (c != 0) out[cov.total->edge_id(k, x)] += c;
    }
  }
  return out;
}

PrymLattice prym_lattice(const H1Lattice& h1, const IntMat& sigma_star) {
  const int n = h1.rank();
  if (sigma_star.rows() != n || sigma_star.cols() != n)
    throw std::invalid_argument("prym_lattice: involution matrix size mismatch");
  if (!(sigma_star * sigma_star).is_identity())
    throw std::invalid_argument("prym_lattice: matrix is not an involution");

  PrymLattice p;
  std::vector<IntVec> ker = kernel_basis(IntMat::identity(n) + sigma_star);
  p.rank = static_cast<int>(ker.size());
  p.basis = IntMat(n, p.rank);
  for (int j = 0; j < p.rank; ++j) p.basis.set_col(j, ker[j]);

  p.restricted_form = p.basis.transpose() * h1.form * p.basis;
  p.form_even = true;
  for (int i = 0; i < p.rank; ++i)
    for (int j = 0; j < p.rank; ++j)
      if (p.restricted_form.at(i, j) % 2 != 0) p.form_even = false;
  if (!p.form_even)
    throw std::invalid_argument("prym_lattice: restricted pairing is not even; "
                                "wrong involution or non-etale data");
  p.halved_form = IntMat(p.rank, p.rank);
  for (int i = 0; i < p.rank; ++i)
    for (int j = 0; j < p.rank; ++j)
      p.halved_form.at(i, j) = p.restricted_form.at(i, j) / 2;
  p.halved_det = det(p.halved_form);
  p.halved_unimodular = (p.halved_det == 1 || p.halved_det == -1);

  // diagnostic: index of the image of 1 - sigma inside the kernel lattice
  auto coords = express_in_basis(p.basis, IntMat::identity(n) - sigma_star);
  if (!coords)
    throw std::logic_error("prym_lattice: image of 1 - sigma left the kernel");
  SmithDecomposition sd = smith_normal_form(*coords);
  p.image_index = 1;
  if (sd.rank < p.rank) {
    p.image_index = 0;  // image of lower rank (degenerate input)
  } else {
    for (const Int& v : sd.invariants) p.image_index *= v;
  }
  return p;
}

std::optional<IntMat> restrict_map(const IntMat& m, const PrymLattice& from,
                                   const PrymLattice& to) {
  return express_in_basis(to.basis, m * from.basis);
}

bool IsogenyPackage::all_passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.passed; });
}

IsogenyPackage verify_isogeny_package(const MonodromyRep& rep) {
  ValidationReport vr = validate(rep);
  if (!vr.admissible()) {
    std::ostringstream os;
    os << "verify_isogeny_package: seed not admissible:";
    for (const auto& f : vr.failures()) os << ' ' << f << ';';
    throw std::invalid_argument(os.str());
  }
  const int n = rep.degree_n;
  if (n % 2 != 0)
    throw std::invalid_argument("verify_isogeny_package: n must be even");

  LiftAction la = lift_action(rep);
  SplitReport sr = split(la);
  if (!sr.split)
    throw std::invalid_argument("verify_isogeny_package: lift curve does not split");

  IsogenyPackage pkg;
  pkg.n = n;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    pkg.verdicts.push_back({name, ok, detail});
  };

  // genera
  CoverAnalysis pairs_an = analyze(pair_action(rep));
  pkg.genus_X = pairs_an.components[0].genus;
  const long long g_X = pkg.genus_X;
  if (g_X < 2)
    throw std::invalid_argument("verify_isogeny_package: requires g_X >= 2");

  // Xtilde side
  CoverAction xt_action = to_cover_action(rep);
  SurfaceComplex xt_cx = build_complex(xt_action);
  H1Lattice xt_h1 = h1_with_form(xt_cx);
  pkg.genus_Xt = xt_cx.genus();

  std::vector<int> iota(2 * n);
  for (int i = 0; i < 2 * n; ++i) iota[i] = (i + n) % (2 * n);
  IntMat iota_star = involution_matrix(xt_cx, xt_h1, iota);
  add("iota-symplectic",
      iota_star.transpose() * xt_h1.form * iota_star == xt_h1.form, "");
  pkg.prym_kappa = prym_lattice(xt_h1, iota_star);
  add("prym-kappa-rank", pkg.prym_kappa.rank == 2 * (g_X - 1),
      "rank " + std::to_string(pkg.prym_kappa.rank));
  add("prym-kappa-polarization", pkg.prym_kappa.halved_unimodular,
      "halved form determinant " + pkg.prym_kappa.halved_det.str());

  // Ctilde_1 side
  std::vector<int> c1_points;
  for (int L = 0; L < la.lift_count(); ++L)
    if (sr.component_of[L] == sr.component_of[0]) c1_points.push_back(L);
  std::vector<int> relabel;
  CoverAction c1t_action = restrict_to_component(la.action, c1_points, &relabel);
  SurfaceComplex c1t_cx = build_complex(c1t_action);
  H1Lattice c1t_h1 = h1_with_form(c1t_cx);
  pkg.genus_C1t = c1t_cx.genus();

  std::vector<int> sigma_local(c1_points.size());
  for (std::size_t i = 0; i < c1_points.size(); ++i) {
    int m = static_cast<int>(~static_cast<LiftMask>(c1_points[i]) & la.full_mask());
    if (relabel[m] < 0)
      throw std::logic_error("verify_isogeny_package: complement left the component");
    sigma_local[i] = relabel[m];
  }
  IntMat sigma_star = involution_matrix(c1t_cx, c1t_h1, sigma_local);
  add("sigma-symplectic",
      sigma_star.transpose() * c1t_h1.form * sigma_star == c1t_h1.form, "");

  SigmaQuotient q = sigma_quotient(la);
  pkg.genus_C1 = q.analysis.components[orbit_index(q.quotient.generators,
                                                   q.quotient.point_count)[q.class_of[0]]]
                     .genus;
  pkg.prym_tau1 = prym_lattice(c1t_h1, sigma_star);
  add("prym-tau1-rank", pkg.prym_tau1.rank == 2 * (pkg.genus_C1t - pkg.genus_C1),
      "rank " + std::to_string(pkg.prym_tau1.rank));
  add("prym-tau1-polarization", pkg.prym_tau1.halved_unimodular,
      "halved form determinant " + pkg.prym_tau1.halved_det.str());

  // correspondence-induced maps
  SCorrespondence sc = build_S(la, sr);
  auto s_rule = [&](int li) {
    std::vector<int> sheets;
    LiftMask L = sc.c1.lifts[li];
    for (int p = 0; p < n; ++p) sheets.push_back(p + n * ((L >> p) & 1));
    return sheets;
  };
  auto st_rule = [&](int x) {
    std::vector<int> lifts;
    for (int inc : sc.over_right[x]) lifts.push_back(sc.left_of[inc]);
    return lifts;
  };
  pkg.s_star = correspondence_matrix(c1t_cx, c1t_h1, xt_cx, xt_h1, s_rule);
  pkg.st_star = correspondence_matrix(xt_cx, xt_h1, c1t_cx, c1t_h1, st_rule);

  add("adjointness",
      xt_h1.form * pkg.s_star == pkg.st_star.transpose() * c1t_h1.form, "");
  add("s-sigma-commutes", pkg.s_star * sigma_star == iota_star * pkg.s_star, "");

  auto s_res = restrict_map(pkg.s_star, pkg.prym_tau1, pkg.prym_kappa);
  auto st_res = restrict_map(pkg.st_star, pkg.prym_kappa, pkg.prym_tau1);
  add("s-preserves-prym", s_res.has_value(), "");
  add("st-preserves-prym", st_res.has_value(), "");
  if (!s_res || !st_res) return pkg;
  pkg.s_restricted = *s_res;
  pkg.st_restricted = *st_res;

  const Int scalar = Int(1) << (n - 2);
  add("s-st-multiplication",
      pkg.s_restricted * pkg.st_restricted ==
          scalar * IntMat::identity(pkg.prym_kappa.rank),
      "expects " + scalar.str() + " * identity on the kappa Prym lattice");

  if (n == 4) {
    add("st-s-multiplication",
        pkg.st_restricted * pkg.s_restricted ==
            Int(4) * IntMat::identity(pkg.prym_tau1.rank),
        "expects 4 * identity on the tau1 Prym lattice");

    Int deg = det(pkg.s_restricted);
    Int abs_deg = deg < 0 ? Int(-deg) : deg;
    Int expected = Int(1) << (2 * (g_X - 1));
    add("isogeny-degree", abs_deg == expected,
        "|det s| = " + abs_deg.str() + ", expects " + expected.str());

    bool even_entries = true;
    for (int i = 0; i < pkg.s_restricted.rows(); ++i)
      for (int j = 0; j < pkg.s_restricted.cols(); ++j)
        if (pkg.s_restricted.at(i, j) % 2 != 0) even_entries = false;
    std::string div_detail;
    if (!even_entries) {
      SmithDecomposition sd = smith_normal_form(pkg.s_restricted);
      div_detail = "restricted s has elementary divisors (";
      for (std::size_t i = 0; i < sd.invariants.size(); ++i) {
        if (i) div_detail += ",";
        div_detail += sd.invariants[i].str();
      }
      div_detail += "), not all even";
    }
    add("divisibility-by-2", even_entries, div_detail);
    if (even_entries) {
      pkg.psi = IntMat(pkg.s_restricted.rows(), pkg.s_restricted.cols());
      for (int i = 0; i < pkg.psi.rows(); ++i)
        for (int j = 0; j < pkg.psi.cols(); ++j)
          pkg.psi.at(i, j) = pkg.s_restricted.at(i, j) / 2;
      Int pdet = det(pkg.psi);
      add("psi-unimodular", pdet == 1 || pdet == -1, "det psi = " + pdet.str());
      add("psi-preserves-pairing",
          pkg.psi.transpose() * pkg.prym_kappa.halved_form * pkg.psi ==
              pkg.prym_tau1.halved_form,
          "");
    }

    // the distance-2 operator kills the tau1 Prym lattice
    auto d2_rule = [&](int li) {
      std::vector<int> out;
      for (std::size_t j = 0; j < sc.c1.lifts.size(); ++j)
        if (std::popcount(static_cast<unsigned>(sc.c1.lifts[li] ^ sc.c1.lifts[j])) == 2)
          out.push_back(static_cast<int>(j));
      return out;
    };
    IntMat d2_star = correspondence_matrix(c1t_cx, c1t_h1, c1t_cx, c1t_h1, d2_rule);
    add("d2-annihilates-prym", (d2_star * pkg.prym_tau1.basis).is_zero(), "");
  }
  return pkg;
}

}  // namespace prym
