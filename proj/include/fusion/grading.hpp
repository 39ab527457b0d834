#pragma once

// Adjoint subring, universal grading group and its character group.

#include "fusion/homalg.hpp"
#include "fusion/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace fusion {

/// Closure under multiplication of {k : k appears in i i* for some i}.
inline std::vector<Index> adjoint_support(const FusionRing& ring) {
  const std::size_t r = ring.rank();
  std::vector<bool> in(r, false);
  for (Index i = 0; i < r; ++i)
    for (Index k = 0; k < r; ++k)
      if (ring.n(i, ring.dual(i), k) > 0) in[k] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Index i = 0; i < r; ++i) {
      if (!in[i]) continue;
      for (Index j = 0; j < r; ++j) {
        if (!in[j]) continue;
        for (Index k = 0; k < r; ++k)
          if (!in[k] && ring.n(i, j, k) > 0) in[k] = grew = true;
      }
    }
  }
  std::vector<Index> out;
  for (Index k = 0; k < r; ++k)
    if (in[k]) out.push_back(k);
  return out;
}

/// A partition of the basis into degree classes with the induced group law.
struct GradingGroup {
  std::vector<std::vector<Index>> classes;  // sorted by smallest member
  std::vector<std::size_t> class_of;        // basis index -> class
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity_class = 0;

  std::size_t order() const { return classes.size(); }
  bool trivial() const { return classes.size() == 1; }

  std::size_t inverse(std::size_t a) const {
    for (std::size_t b = 0; b < order(); ++b)
      if (table[a][b] == identity_class) return b;
    throw std::logic_error("grading table has no inverse");
  }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Classes are the orbits of left multiplication by the adjoint subring.
/// Throws AxiomError if the induced product is not well defined.
inline GradingGroup universal_grading(const FusionRing& ring) {
  const std::size_t r = ring.rank();
  const auto adj = adjoint_support(ring);
  detail::UnionFind uf(r);
  for (Index a : adj)
    for (Index i = 0; i < r; ++i)
      for (Index k = 0; k < r; ++k)
        if (ring.n(a, i, k) > 0) uf.unite(i, k);

  GradingGroup g;
  g.class_of.assign(r, 0);
  std::vector<long> root_class(r, -1);
  for (Index i = 0; i < r; ++i) {
    const std::size_t root = uf.find(i);
    if (root_class[root] < 0) {
      root_class[root] = static_cast<long>(g.classes.size());
      g.classes.emplace_back();
    }
    g.class_of[i] = static_cast<std::size_t>(root_class[root]);
    g.classes[g.class_of[i]].push_back(i);
  }
  g.identity_class = g.class_of[ring.unit()];

  const std::size_t q = g.classes.size();
  g.table.assign(q, std::vector<std::size_t>(q, q));
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k) {
        if (ring.n(i, j, k) == 0) continue;
        auto& cell = g.table[g.class_of[i]][g.class_of[j]];
        if (cell == q)
          cell = g.class_of[k];
        else if (cell != g.class_of[k])
          throw AxiomError("universal grading is not well defined: " + ring.label(i) + "*" +
                           ring.label(j) + " meets two classes");
      }
  for (const auto& row : g.table)
    for (std::size_t c : row)
      if (c == q) throw AxiomError("universal grading: empty product of classes");
  for (Index i = 0; i < r; ++i)
    if (g.table[g.class_of[i]][g.class_of[ring.dual(i)]] != g.identity_class)
      throw AxiomError("universal grading: class of the dual is not inverse");
  return g;
}

/// Abelianization of a finite group given by its multiplication table:
/// Z^q modulo e_a + e_b - e_(ab), via Smith normal form.
inline FiniteAbelianGroup abelianization(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t q = table.size();
  if (q == 0) return {};
  IntMatrix rel(q, q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      const std::size_t col = a * q + b;
      rel(a, col) += 1;
      rel(b, col) += 1;
      rel(table[a][b], col) -= 1;
    }
  std::vector<Integer> orders;
  const auto diag = smith_normal_form(rel).diagonal();
  for (std::size_t i = 0; i < q; ++i) {
    const Integer d = i < diag.size() ? diag[i] : Integer(0);
    if (d == 0) throw std::logic_error("abelianization of a finite group has a free part");
    orders.push_back(d);
  }
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

inline FiniteAbelianGroup abelianization(const GradingGroup& group) {
  return abelianization(group.table);
}

/// Hom(U(C), C^x); for finite abelian A, Hom(A, C^x) is isomorphic to A.
inline FiniteAbelianGroup character_group(const FusionRing& ring) {
  return abelianization(universal_grading(ring));
}

}  // namespace fusion
