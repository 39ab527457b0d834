#pragma once

// Fusion rings and fusion bimodules as finite non-negative integer tensors.

#include "fusion/error.hpp"
#include "fusion/integer.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace fusion {

using Index = std::size_t;

// Dense rank-3 array of integers, row-major in (i, j, k).
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
      : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2) {}

  std::size_t extent(int axis) const { return axis == 0 ? d0_ : axis == 1 ? d1_ : d2_; }

  const Integer& operator()(Index i, Index j, Index k) const { return data_[offset(i, j, k)]; }
  Integer& operator()(Index i, Index j, Index k) { return data_[offset(i, j, k)]; }

  const std::vector<Integer>& data() const { return data_; }

  bool operator==(const Tensor3&) const = default;

 private:
  std::size_t offset(Index i, Index j, Index k) const { return (i * d1_ + j) * d2_ + k; }

  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<Integer> data_;
};

namespace detail {

inline void require_distinct(const std::vector<std::string>& labels, std::string_view what) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second)
      throw StructureError(std::string(what) + ": duplicate label '" + l + "'");
  }
}

inline void require_nonnegative(const Tensor3& t, std::string_view what) {
  for (const auto& x : t.data())
    if (x < 0) throw StructureError(std::string(what) + ": negative multiplicity");
}

}  // namespace detail

/// A based ring with unit and duality. Construction checks shapes only;
/// the axioms are checked by verify_ring.
class FusionRing {
 public:
  FusionRing(std::vector<std::string> labels, Index unit, std::vector<Index> dual, Tensor3 n)
      : labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)), n_(std::move(n)) {
    const std::size_t r = labels_.size();
    if (r == 0) throw StructureError("fusion ring: empty basis");
    detail::require_distinct(labels_, "fusion ring");
    if (unit_ >= r) throw StructureError("fusion ring: unit index out of range");
    if (dual_.size() != r) throw StructureError("fusion ring: dual has wrong length");
    for (Index d : dual_)
      if (d >= r) throw StructureError("fusion ring: dual entry out of range");
    if (n_.extent(0) != r || n_.extent(1) != r || n_.extent(2) != r)
      throw StructureError("fusion ring: structure tensor shape does not match basis");
    detail::require_nonnegative(n_, "fusion ring");
  }

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index i) const { return labels_.at(i); }
  Index unit() const { return unit_; }
  Index dual(Index i) const { return dual_.at(i); }
  const std::vector<Index>& duals() const { return dual_; }
  const Integer& n(Index i, Index j, Index k) const { return n_(i, j, k); }
  const Tensor3& tensor() const { return n_; }

  std::optional<Index> find(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Index>(it - labels_.begin());
  }

  Index index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw NotFoundError("unknown basis label '" + std::string(label) + "'");
  }

  bool operator==(const FusionRing&) const = default;

 private:
  std::vector<std::string> labels_;
  Index unit_;
  std::vector<Index> dual_;
  Tensor3 n_;
};

enum class Axiom {
  unit_law,
  associativity,
  dual_involution,
  dual_unit,
  rigidity,
  frobenius_reciprocity,
  anti_homomorphism,
  module_unit,
  left_associativity,
  right_associativity,
  middle_associativity,
  module_frobenius,
  grading,
  dimension_balance,
};

inline std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::unit_law: return "unit-law";
    case Axiom::associativity: return "associativity";
    case Axiom::dual_involution: return "dual-involution";
    case Axiom::dual_unit: return "dual-unit";
    case Axiom::rigidity: return "rigidity";
    case Axiom::frobenius_reciprocity: return "frobenius-reciprocity";
    case Axiom::anti_homomorphism: return "anti-homomorphism";
    case Axiom::module_unit: return "module-unit";
    case Axiom::left_associativity: return "left-associativity";
    case Axiom::right_associativity: return "right-associativity";
    case Axiom::middle_associativity: return "middle-associativity";
    case Axiom::module_frobenius: return "module-frobenius";
    case Axiom::grading: return "grading";
    case Axiom::dimension_balance: return "dimension-balance";
  }
  return "unknown";
}

// One failed instance of an axiom. For associativity the witness is
// (i, j, k, l) and lhs/rhs are the two multiplicities of l in (ij)k and i(jk).
struct Violation {
  Axiom axiom;
  std::vector<Index> witness;
  std::string detail;
};

struct VerificationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool contains(Axiom a) const {
    return std::any_of(violations.begin(), violations.end(),
                       [a](const Violation& v) { return v.axiom == a; });
  }
  std::size_t count(Axiom a) const {
    return static_cast<std::size_t>(std::count_if(
        violations.begin(), violations.end(), [a](const Violation& v) { return v.axiom == a; }));
  }
};

namespace detail {

inline std::string join_labels(const FusionRing& ring, std::initializer_list<Index> idx) {
  std::string out = "(";
  bool first = true;
  for (Index i : idx) {
    if (!first) out += ",";
    out += ring.label(i);
    first = false;
  }
  return out + ")";
}

}  // namespace detail

/// Checks every based-ring axiom and collects all violations.
inline VerificationReport verify_ring(const FusionRing& ring) {
  VerificationReport report;
  auto push = [&](Axiom a, std::vector<Index> w, std::string d) {
    report.violations.push_back({a, std::move(w), std::move(d)});
  };
  const std::size_t r = ring.rank();
  const Index u = ring.unit();

  for (Index j = 0; j < r; ++j) {
    for (Index k = 0; k < r; ++k) {
      const Integer want = j == k ? 1 : 0;
      if (ring.n(u, j, k) != want)
        push(Axiom::unit_law, {u, j, k},
             "1*" + ring.label(j) + " has multiplicity " + to_string(ring.n(u, j, k)) + " of " +
                 ring.label(k));
      if (ring.n(j, u, k) != want)
        push(Axiom::unit_law, {j, u, k},
             ring.label(j) + "*1 has multiplicity " + to_string(ring.n(j, u, k)) + " of " +
                 ring.label(k));
    }
  }

  for (Index i = 0; i < r; ++i) {
    if (ring.dual(ring.dual(i)) != i)
      push(Axiom::dual_involution, {i}, "dual(dual(" + ring.label(i) + ")) != " + ring.label(i));
  }
  if (ring.dual(u) != u) push(Axiom::dual_unit, {u}, "unit is not self-dual");

  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < r; ++j) {
      const Integer want = j == ring.dual(i) ? 1 : 0;
      if (ring.n(i, j, u) != want)
        push(Axiom::rigidity, {i, j},
             "multiplicity of unit in " + detail::join_labels(ring, {i, j}) + " is " +
                 to_string(ring.n(i, j, u)));
    }
  }

  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < r; ++j) {
      for (Index k = 0; k < r; ++k) {
        const Integer& x = ring.n(i, j, k);
        if (x != ring.n(ring.dual(i), k, j) || x != ring.n(k, ring.dual(j), i))
          push(Axiom::frobenius_reciprocity, {i, j, k},
               "N" + detail::join_labels(ring, {i, j, k}) + " disagrees with its reciprocal");
        if (x != ring.n(ring.dual(j), ring.dual(i), ring.dual(k)))
          push(Axiom::anti_homomorphism, {i, j, k},
               "N" + detail::join_labels(ring, {i, j, k}) + " != N of the dualized triple");
      }
    }
  }

  // (ij)k versus i(jk), coefficient of l.
  std::vector<Integer> lhs(r), rhs(r);
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < r; ++j) {
      for (Index k = 0; k < r; ++k) {
        for (Index l = 0; l < r; ++l) {
          lhs[l] = 0;
          rhs[l] = 0;
        }
        for (Index m = 0; m < r; ++m) {
          const Integer& a = ring.n(i, j, m);
          const Integer& b = ring.n(j, k, m);
          if (a == 0 && b == 0) continue;
          for (Index l = 0; l < r; ++l) {
            if (a != 0) lhs[l] += a * ring.n(m, k, l);
            if (b != 0) rhs[l] += b * ring.n(i, m, l);
          }
        }
        for (Index l = 0; l < r; ++l) {
          if (lhs[l] != rhs[l])
            push(Axiom::associativity, {i, j, k, l},
                 "coefficient of " + ring.label(l) + " in " +
                     detail::join_labels(ring, {i, j, k}) + ": (ab)c gives " + to_string(lhs[l]) +
                     ", a(bc) gives " + to_string(rhs[l]));
        }
      }
    }
  }
  return report;
}

/// (k, multiplicity) pairs of a linear combination of basis elements, sorted by k.
using Multiset = std::vector<std::pair<Index, Integer>>;

inline void require_index(const FusionRing& ring, Index i) {
  if (i >= ring.rank())
    throw std::out_of_range("basis index " + std::to_string(i) + " out of range for rank " +
                            std::to_string(ring.rank()));
}

inline Multiset multiply(const FusionRing& ring, Index i, Index j) {
  require_index(ring, i);
  require_index(ring, j);
  Multiset out;
  for (Index k = 0; k < ring.rank(); ++k)
    if (ring.n(i, j, k) > 0) out.emplace_back(k, ring.n(i, j, k));
  return out;
}

// Dense products of linear combinations.
inline std::vector<Integer> multiply(const FusionRing& ring, const std::vector<Integer>& a,
                                     const std::vector<Integer>& b) {
  const std::size_t r = ring.rank();
  std::vector<Integer> out(r);
  for (Index i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (Index j = 0; j < r; ++j) {
      if (b[j] == 0) continue;
      const Integer ab = a[i] * b[j];
      for (Index k = 0; k < r; ++k)
        if (ring.n(i, j, k) != 0) out[k] += ab * ring.n(i, j, k);
    }
  }
  return out;
}

inline std::vector<Integer> basis_vector(const FusionRing& ring, Index i) {
  std::vector<Integer> v(ring.rank());
  v.at(i) = 1;
  return v;
}

inline std::string format_multiset(const FusionRing& ring, const Multiset& m) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : m) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += to_string(c) + "*";
    out += ring.label(k);
  }
  return out;
}

struct FpOptions {
  double tolerance = 1e-10;
  std::size_t max_iterations = 1'000'000;
};

struct FpVector {
  std::vector<double> dims;
  double tolerance = 1e-10;
  std::size_t iterations = 0;

  double operator[](Index i) const { return dims.at(i); }
  double global_dimension() const {
    double s = 0;
    for (double d : dims) s += d * d;
    return s;
  }
};

namespace detail {

// Perron vector of a non-negative matrix with positive diagonal, normalized
// so that entry `anchor` equals one.
inline std::vector<double> perron_vector(const std::vector<std::vector<double>>& a, Index anchor,
                                         const FpOptions& opts, std::size_t& iterations) {
  const std::size_t r = a.size();
  std::vector<double> v(r, 1.0), w(r);
  for (iterations = 1; iterations <= opts.max_iterations; ++iterations) {
    for (Index j = 0; j < r; ++j) {
      double s = 0;
      for (Index k = 0; k < r; ++k) s += a[j][k] * v[k];
      w[j] = s;
    }
    const double scale = w[anchor];
    if (!(scale > 0) || !std::isfinite(scale))
      throw NumericalError("Perron iteration: anchor component vanished");
    double diff = 0;
    for (Index j = 0; j < r; ++j) {
      w[j] /= scale;
      diff = std::max(diff, std::abs(w[j] - v[j]));
    }
    v.swap(w);
    if (diff < opts.tolerance) return v;
  }
  throw NumericalError("Perron iteration did not converge within " +
                       std::to_string(opts.max_iterations) + " iterations");
}

}  // namespace detail

/// Frobenius-Perron dimensions as the Perron vector of sum_i N_i, where
/// (N_i)_{jk} = n[i][j][k]. The unit row makes the diagonal positive, so
/// the iteration is primitive.
inline FpVector fp_dimensions(const FusionRing& ring, const FpOptions& opts = {}) {
  const std::size_t r = ring.rank();
  std::vector<std::vector<double>> a(r, std::vector<double>(r, 0.0));
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k)
        if (ring.n(i, j, k) != 0) a[j][k] += ring.n(i, j, k).convert_to<double>();
  FpVector out;
  out.tolerance = opts.tolerance;
  out.dims = detail::perron_vector(a, ring.unit(), opts, out.iterations);
  return out;
}

/// max |d_i d_j - sum_k n[i][j][k] d_k| over all pairs.
inline double multiplicativity_residual(const FusionRing& ring, const std::vector<double>& dims) {
  double worst = 0;
  const std::size_t r = ring.rank();
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < r; ++j) {
      double s = 0;
      for (Index k = 0; k < r; ++k)
        if (ring.n(i, j, k) != 0) s += ring.n(i, j, k).convert_to<double>() * dims[k];
      worst = std::max(worst, std::abs(dims[i] * dims[j] - s));
    }
  }
  return worst;
}

/// The invertible basis elements with their multiplication table.
struct InvertibleGroup {
  std::vector<Index> elements;            // basis indices, ascending
  std::vector<std::vector<Index>> table;  // positions into `elements`
  Index identity = 0;                     // position of the unit

  std::size_t order() const { return elements.size(); }

  std::size_t position(Index basis) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), basis);
    if (it == elements.end() || *it != basis)
      throw std::invalid_argument("basis element is not invertible");
    return static_cast<std::size_t>(it - elements.begin());
  }
  bool contains(Index basis) const {
    return std::binary_search(elements.begin(), elements.end(), basis);
  }
  Index product(Index a, Index b) const { return elements[table[position(a)][position(b)]]; }
};

inline bool is_invertible(const FusionRing& ring, Index i) {
  Integer total = 0;
  for (Index k = 0; k < ring.rank(); ++k) total += ring.n(i, ring.dual(i), k);
  return total == 1;
}

// The unique basis element of a product that is a single basis element.
inline std::optional<Index> single_term(const std::vector<Integer>& v) {
  std::optional<Index> found;
  for (Index k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (v[k] != 1 || found) return std::nullopt;
    found = k;
  }
  return found;
}

inline InvertibleGroup invertibles(const FusionRing& ring) {
  InvertibleGroup g;
  for (Index i = 0; i < ring.rank(); ++i)
    if (is_invertible(ring, i)) g.elements.push_back(i);
  g.identity = g.position(ring.unit());
  const std::size_t q = g.elements.size();
  g.table.assign(q, std::vector<Index>(q));
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      auto prod = single_term(multiply(ring, basis_vector(ring, g.elements[a]),
                                       basis_vector(ring, g.elements[b])));
      if (!prod || !g.contains(*prod))
        throw AxiomError("invertible elements are not closed under multiplication");
      g.table[a][b] = g.position(*prod);
    }
  }
  return g;
}

/// i -> g i g* on basis labels, for an invertible g.
inline std::vector<Index> conjugation_permutation(const FusionRing& ring, Index g) {
  require_index(ring, g);
  if (!is_invertible(ring, g))
    throw std::invalid_argument("conjugation by non-invertible element " + ring.label(g));
  const auto gv = basis_vector(ring, g);
  const auto gdv = basis_vector(ring, ring.dual(g));
  std::vector<Index> perm(ring.rank());
  for (Index i = 0; i < ring.rank(); ++i) {
    auto c = single_term(multiply(ring, multiply(ring, gv, basis_vector(ring, i)), gdv));
    if (!c) throw AxiomError("conjugate of a basis element is not a basis element");
    perm[i] = *c;
  }
  return perm;
}

/// Left/right fusion module constants over one or two rings. Either side may
/// be absent, in which case the value is a one-sided module.
class FusionBimodule {
 public:
  using RingRef = std::shared_ptr<const FusionRing>;

  FusionBimodule(RingRef left_ring, RingRef right_ring, std::vector<std::string> labels,
                 std::optional<Tensor3> left, std::optional<Tensor3> right)
      : left_ring_(std::move(left_ring)),
        right_ring_(std::move(right_ring)),
        labels_(std::move(labels)),
        left_(std::move(left)),
        right_(std::move(right)) {
    if (!left_ring_ || !right_ring_) throw StructureError("fusion module: missing ring");
    const std::size_t s = labels_.size();
    if (s == 0) throw StructureError("fusion module: empty basis");
    detail::require_distinct(labels_, "fusion module");
    if (!left_ && !right_) throw StructureError("fusion module: neither action given");
    auto check = [s](const Tensor3& t, const FusionRing& ring, const char* side) {
      if (t.extent(0) != ring.rank() || t.extent(1) != s || t.extent(2) != s)
        throw StructureError(std::string("fusion module: ") + side +
                             " action shape does not match ring and module ranks");
      detail::require_nonnegative(t, "fusion module");
    };
    if (left_) check(*left_, *left_ring_, "left");
    if (right_) check(*right_, *right_ring_, "right");
  }

  const FusionRing& left_ring() const { return *left_ring_; }
  const FusionRing& right_ring() const { return *right_ring_; }
  const RingRef& left_ring_ref() const { return left_ring_; }
  const RingRef& right_ring_ref() const { return right_ring_; }
  bool single_ring() const {
    return left_ring_ == right_ring_ || *left_ring_ == *right_ring_;
  }

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index m) const { return labels_.at(m); }
  std::optional<Index> find(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Index>(it - labels_.begin());
  }

  bool has_left() const { return left_.has_value(); }
  bool has_right() const { return right_.has_value(); }
  // Multiplicity of n in X_i (x) m.
  const Integer& l(Index i, Index m, Index n) const { return (*left_)(i, m, n); }
  // Multiplicity of n in m (x) Y_j.
  const Integer& r(Index j, Index m, Index n) const { return (*right_)(j, m, n); }
  const std::optional<Tensor3>& left_tensor() const { return left_; }
  const std::optional<Tensor3>& right_tensor() const { return right_; }

  bool operator==(const FusionBimodule& o) const {
    return *left_ring_ == *o.left_ring_ && *right_ring_ == *o.right_ring_ &&
           labels_ == o.labels_ && left_ == o.left_ && right_ == o.right_;
  }

 private:
  RingRef left_ring_, right_ring_;
  std::vector<std::string> labels_;
  std::optional<Tensor3> left_, right_;
};

inline VerificationReport verify_bimodule(const FusionBimodule& mod) {
  VerificationReport report;
  auto push = [&](Axiom a, std::vector<Index> w, std::string d) {
    report.violations.push_back({a, std::move(w), std::move(d)});
  };
  const std::size_t s = mod.rank();

  if (mod.has_left()) {
    const FusionRing& ring = mod.left_ring();
    const std::size_t r = ring.rank();
    const Index u = ring.unit();
    for (Index m = 0; m < s; ++m)
      for (Index n = 0; n < s; ++n)
        if (mod.l(u, m, n) != (m == n ? 1 : 0))
          push(Axiom::module_unit, {u, m, n}, "left unit action on " + mod.label(m));
    for (Index i = 0; i < r; ++i)
      for (Index m = 0; m < s; ++m)
        for (Index n = 0; n < s; ++n)
          if (mod.l(i, m, n) != mod.l(ring.dual(i), n, m))
            push(Axiom::module_frobenius, {i, m, n},
                 "left: " + ring.label(i) + "," + mod.label(m) + "," + mod.label(n));
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < r; ++j)
        for (Index m = 0; m < s; ++m)
          for (Index q = 0; q < s; ++q) {
            Integer lhs = 0, rhs = 0;
            for (Index p = 0; p < r; ++p)
              if (ring.n(i, j, p) != 0) lhs += ring.n(i, j, p) * mod.l(p, m, q);
            for (Index t = 0; t < s; ++t)
              if (mod.l(j, m, t) != 0) rhs += mod.l(j, m, t) * mod.l(i, t, q);
            if (lhs != rhs)
              push(Axiom::left_associativity, {i, j, m, q},
                   "(" + ring.label(i) + ring.label(j) + ")" + mod.label(m) + " vs " +
                       ring.label(i) + "(" + ring.label(j) + mod.label(m) + ") at " +
                       mod.label(q));
          }
  }

  if (mod.has_right()) {
    const FusionRing& ring = mod.right_ring();
    const std::size_t r = ring.rank();
    const Index u = ring.unit();
    for (Index m = 0; m < s; ++m)
      for (Index n = 0; n < s; ++n)
        if (mod.r(u, m, n) != (m == n ? 1 : 0))
          push(Axiom::module_unit, {u, m, n}, "right unit action on " + mod.label(m));
    for (Index j = 0; j < r; ++j)
      for (Index m = 0; m < s; ++m)
        for (Index n = 0; n < s; ++n)
          if (mod.r(j, m, n) != mod.r(ring.dual(j), n, m))
            push(Axiom::module_frobenius, {j, m, n},
                 "right: " + mod.label(m) + "," + ring.label(j) + "," + mod.label(n));
    // m (Y_i Y_j) versus (m Y_i) Y_j.
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < r; ++j)
        for (Index m = 0; m < s; ++m)
          for (Index q = 0; q < s; ++q) {
            Integer lhs = 0, rhs = 0;
            for (Index p = 0; p < r; ++p)
              if (ring.n(i, j, p) != 0) lhs += ring.n(i, j, p) * mod.r(p, m, q);
            for (Index t = 0; t < s; ++t)
              if (mod.r(i, m, t) != 0) rhs += mod.r(i, m, t) * mod.r(j, t, q);
            if (lhs != rhs)
              push(Axiom::right_associativity, {i, j, m, q},
                   mod.label(m) + "(" + ring.label(i) + ring.label(j) + ") vs (" + mod.label(m) +
                       ring.label(i) + ")" + ring.label(j) + " at " + mod.label(q));
          }
  }

  if (mod.has_left() && mod.has_right()) {
    const FusionRing& lr = mod.left_ring();
    const FusionRing& rr = mod.right_ring();
    for (Index i = 0; i < lr.rank(); ++i)
      for (Index j = 0; j < rr.rank(); ++j)
        for (Index m = 0; m < s; ++m)
          for (Index q = 0; q < s; ++q) {
            Integer lhs = 0, rhs = 0;
            for (Index t = 0; t < s; ++t) {
              if (mod.l(i, m, t) != 0) lhs += mod.l(i, m, t) * mod.r(j, t, q);
              if (mod.r(j, m, t) != 0) rhs += mod.r(j, m, t) * mod.l(i, t, q);
            }
            if (lhs != rhs)
              push(Axiom::middle_associativity, {i, j, m, q},
                   "(" + lr.label(i) + mod.label(m) + ")" + rr.label(j) + " vs " + lr.label(i) +
                       "(" + mod.label(m) + rr.label(j) + ") at " + mod.label(q));
          }
  }
  return report;
}

/// The ring acting on itself from both sides. Module labels are the ring
/// labels with a trailing prime.
inline FusionBimodule regular_bimodule(std::shared_ptr<const FusionRing> ring) {
  const std::size_t r = ring->rank();
  std::vector<std::string> labels;
  for (const auto& l : ring->labels()) labels.push_back(l + "'");
  Tensor3 left(r, r, r), right(r, r, r);
  for (Index i = 0; i < r; ++i)
    for (Index m = 0; m < r; ++m)
      for (Index n = 0; n < r; ++n) {
        left(i, m, n) = ring->n(i, m, n);
        right(i, m, n) = ring->n(m, i, n);
      }
  return FusionBimodule(ring, ring, std::move(labels), std::move(left), std::move(right));
}

}  // namespace fusion
