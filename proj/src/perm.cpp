#include "prym/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace prym {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int d = degree();
  std::vector<char> seen(d, 0);
  for (int v : images_) {
    if (v < 0 || v >= d || seen[v])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(degree());
  for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> im(p.degree());
  for (int i = 0; i < p.degree(); ++i) im[i] = q(p(i));
  return Permutation(std::move(im));
}

Permutation conjugate(const Permutation& p, const Permutation& w) {
  return compose(compose(w.inverse(), p), w);
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  const std::size_t n = text.size();
  bool any_group = false;
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle notation", i);
    std::size_t open = i;
    ++i;
    std::vector<int> cyc;
    while (true) {
      while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i >= n) throw ParseError("unterminated cycle", open);
      if (text[i] == ')') { ++i; break; }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point index or ')'", i);
      std::size_t start = i;
      long v = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > degree) break;
        ++i;
      }
      if (v >= degree)
        throw ParseError("point index out of range", start);
      if (used[v])
        throw ParseError("point repeated across cycles", start);
      used[static_cast<int>(v)] = 1;
      cyc.push_back(static_cast<int>(v));
    }
    any_group = true;
    for (std::size_t k = 0; k < cyc.size(); ++k)
      im[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  if (!any_group)
    throw ParseError("empty permutation string; identity is \"()\"", 0);
  return Permutation(std::move(im));
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  bool wrote = false;
  std::vector<char> seen(degree(), 0);
  for (int s = 0; s < degree(); ++s) {
    if (seen[s] || images_[s] == s) continue;
    out << '(';
    int x = s;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << x;
      first = false;
      seen[x] = 1;
      x = images_[x];
    } while (x != s);
    out << ')';
    wrote = true;
  }
  if (!wrote) return "()";
  return out.str();
}

CycleType cycle_type(const Permutation& p) {
  CycleType t;
  for (const auto& c : cycles_of(p)) t.parts.push_back(static_cast<int>(c.size()));
  std::sort(t.parts.begin(), t.parts.end(), std::greater<int>());
  return t;
}

std::string CycleType::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ',';
    out << parts[i];
  }
  out << ')';
  return out.str();
}

std::vector<std::vector<int>> cycles_of(const Permutation& p) {
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(p.degree(), 0);
  for (int s = 0; s < p.degree(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    int x = s;
    do {
      seen[x] = 1;
      c.push_back(x);
      x = p(x);
    } while (x != s);
    cycles.push_back(std::move(c));
  }
  return cycles;
}

std::vector<int> orbit_index(const std::vector<Permutation>& gens, int degree) {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("orbits: generator degree mismatch");
  std::vector<Permutation> invs;
  invs.reserve(gens.size());
  for (const auto& g : gens) invs.push_back(g.inverse());
  std::vector<int> comp(degree, -1);
  int next_id = 0;
  std::vector<int> stack;
  for (int s = 0; s < degree; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next_id;
    stack.push_back(s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        for (int y : {gens[k](x), invs[k](x)}) {
          if (comp[y] < 0) {
            comp[y] = next_id;
            stack.push_back(y);
          }
        }
      }
    }
    ++next_id;
  }
  return comp;
}

std::vector<std::vector<int>> orbits(const std::vector<Permutation>& gens,
                                     int degree) {
  std::vector<int> comp = orbit_index(gens, degree);
  int n = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  std::vector<std::vector<int>> out(n);
  for (int x = 0; x < degree; ++x) out[comp[x]].push_back(x);
  return out;
}

}  // namespace prym
