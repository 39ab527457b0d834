#pragma once

// Integer linear algebra and cohomology of finite cyclic groups.

#include "fusion/error.hpp"
#include "fusion/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace fusion {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
      if (row.size() != cols_) throw StructureError("IntMatrix: ragged initializer");
      for (long long x : row) a_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const IntMatrix&) const = default;

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw StructureError("IntMatrix: dimension mismatch in product");
    IntMatrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k) == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += x(i, k) * y(k, j);
      }
    return out;
  }

  friend IntMatrix operator+(IntMatrix x, const IntMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw StructureError("IntMatrix: dimension mismatch in sum");
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
  }

  friend IntMatrix operator-(IntMatrix x, const IntMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw StructureError("IntMatrix: dimension mismatch in difference");
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += q * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += q * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

struct SmithForm {
  IntMatrix d, u, v;  // u * m * v == d

  std::vector<Integer> diagonal() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
    return out;
  }
  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& x : diagonal())
      if (x != 0) ++r;
    return r;
  }
};

/// Smith normal form by elementary row and column operations, always
/// pivoting on the entry of least absolute value. The diagonal is
/// non-negative, nonzero entries come first and each divides the next.
inline SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  SmithForm s{m, IntMatrix::identity(R), IntMatrix::identity(C)};
  IntMatrix& d = s.d;
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    for (;;) {
      std::size_t pi = R, pj = C;
      Integer best = 0;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (d(i, j) != 0 && (best == 0 || abs(d(i, j)) < best)) {
            best = abs(d(i, j));
            pi = i;
            pj = j;
          }
      if (pi == R) return s;  // remaining block is zero
      d.swap_rows(t, pi);
      s.u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      s.v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        s.u.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        s.v.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < R && divides; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, 1);
            s.u.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
  }
  return s;
}

/// A finite abelian group Z/d_1 + ... + Z/d_t with d_1 | d_2 | ... and d_i >= 2.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  explicit FiniteAbelianGroup(std::vector<Integer> invariant_factors)
      : factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] < 2) throw std::invalid_argument("invariant factor below 2");
      if (i > 0 && factors_[i] % factors_[i - 1] != 0)
        throw std::invalid_argument("invariant factors do not form a divisibility chain");
    }
  }

  static FiniteAbelianGroup cyclic(const Integer& n) { return from_cyclic_orders({n}); }

  // Normalizes any direct sum of cyclic groups (orders >= 1).
  static FiniteAbelianGroup from_cyclic_orders(const std::vector<Integer>& orders) {
    IntMatrix m(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (orders[i] < 1) throw std::invalid_argument("cyclic order must be positive");
      m(i, i) = orders[i];
    }
    std::vector<Integer> out;
    for (const auto& x : smith_normal_form(m).diagonal())
      if (x > 1) out.push_back(x);
    return FiniteAbelianGroup(std::move(out));
  }

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  bool trivial() const { return factors_.empty(); }
  Integer order() const {
    Integer o = 1;
    for (const auto& d : factors_) o *= d;
    return o;
  }
  Integer exponent() const { return factors_.empty() ? Integer(1) : factors_.back(); }

  FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& o) const {
    std::vector<Integer> all = factors_;
    all.insert(all.end(), o.factors_.begin(), o.factors_.end());
    return from_cyclic_orders(all);
  }

  std::string to_string() const {
    if (factors_.empty()) return "0";
    std::string out;
    for (const auto& d : factors_) {
      if (!out.empty()) out += " + ";
      out += "Z/" + d.str();
    }
    return out;
  }

  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  std::vector<Integer> factors_;
};

namespace detail {

inline IntMatrix relation_matrix(const FiniteAbelianGroup& a) {
  const std::size_t k = a.rank();
  IntMatrix r(k, k);
  for (std::size_t i = 0; i < k; ++i) r(i, i) = a.invariant_factors()[i];
  return r;
}

// Columns spanning {x : m x = 0}.
inline IntMatrix kernel_generators(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  const std::size_t rank = s.rank();
  IntMatrix out(m.cols(), m.cols() - rank);
  for (std::size_t j = rank; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) out(i, j - rank) = s.v(i, j);
  return out;
}

// Column echelon basis of the lattice spanned by the columns of g.
struct EchelonBasis {
  IntMatrix basis;                 // rows x t, full column rank
  std::vector<std::size_t> pivot;  // pivot row of each basis column

  std::size_t size() const { return pivot.size(); }

  // Coordinates of v in the basis; v must lie in the lattice.
  std::vector<Integer> coordinates(std::vector<Integer> v) const {
    std::vector<Integer> c(size());
    for (std::size_t col = 0; col < size(); ++col) {
      const std::size_t r = pivot[col];
      if (v[r] % basis(r, col) != 0)
        throw std::logic_error("vector is not in the lattice");
      c[col] = v[r] / basis(r, col);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c[col] * basis(i, col);
    }
    for (const auto& x : v)
      if (x != 0) throw std::logic_error("vector is not in the lattice");
    return c;
  }
};

inline EchelonBasis echelon_basis(IntMatrix g) {
  const std::size_t R = g.rows(), C = g.cols();
  EchelonBasis out;
  std::size_t piv = 0;
  for (std::size_t r = 0; r < R && piv < C; ++r) {
    for (;;) {
      std::size_t best = C;
      for (std::size_t j = piv; j < C; ++j)
        if (g(r, j) != 0 && (best == C || abs(g(r, j)) < abs(g(r, best)))) best = j;
      if (best == C) break;
      g.swap_cols(piv, best);
      bool clean = true;
      for (std::size_t j = piv + 1; j < C; ++j) {
        if (g(r, j) == 0) continue;
        g.add_col(j, piv, -(g(r, j) / g(r, piv)));
        if (g(r, j) != 0) clean = false;
      }
      if (clean) {
        out.pivot.push_back(r);
        ++piv;
        break;
      }
    }
  }
  out.basis = IntMatrix(R, piv);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < piv; ++j) out.basis(i, j) = g(i, j);
  return out;
}

inline std::vector<Integer> column(const IntMatrix& m, std::size_t j) {
  std::vector<Integer> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

/// ker(phi) / im(psi) for endomorphisms of the finite group A given by
/// integer matrices on its standard generators. Requires phi psi = 0.
inline FiniteAbelianGroup subquotient(const FiniteAbelianGroup& a, const IntMatrix& phi,
                                      const IntMatrix& psi) {
  const std::size_t k = a.rank();
  if (k == 0) return {};
  const IntMatrix rel = relation_matrix(a);

  // {x : phi x in L} = projection of ker [phi | -rel].
  IntMatrix joint(k, 2 * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      joint(i, j) = phi(i, j);
      joint(i, k + j) = -rel(i, j);
    }
  const IntMatrix gens = kernel_generators(joint);
  IntMatrix proj(k, gens.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < gens.cols(); ++j) proj(i, j) = gens(i, j);
  const EchelonBasis kernel = echelon_basis(proj);

  // Denominator L + im(psi), written in kernel coordinates.
  IntMatrix coords(kernel.size(), 2 * k);
  for (std::size_t j = 0; j < 2 * k; ++j) {
    const auto c = kernel.coordinates(j < k ? column(rel, j) : column(psi, j - k));
    for (std::size_t i = 0; i < c.size(); ++i) coords(i, j) = c[i];
  }
  std::vector<Integer> orders;
  const auto diag = smith_normal_form(coords).diagonal();
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    const Integer d = i < diag.size() ? diag[i] : Integer(0);
    if (d == 0) throw std::logic_error("subquotient of a finite group has a free part");
    orders.push_back(d);
  }
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

inline IntMatrix power(const IntMatrix& t, std::size_t e) {
  IntMatrix out = IntMatrix::identity(t.rows());
  for (std::size_t i = 0; i < e; ++i) out = out * t;
  return out;
}

// x == y as endomorphisms of A: every column difference lies in the relation lattice.
inline bool same_endomorphism(const FiniteAbelianGroup& a, const IntMatrix& x, const IntMatrix& y) {
  const auto& f = a.invariant_factors();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (mod(x(i, j) - y(i, j), f[i]) != 0) return false;
  return true;
}

}  // namespace detail

/// Coefficients for cyclic-group cohomology: a finite abelian group with the
/// generator of the acting group given as a matrix on its standard generators.
class CoefficientModule {
 public:
  CoefficientModule() = default;
  explicit CoefficientModule(FiniteAbelianGroup group)
      : group_(std::move(group)), action_(IntMatrix::identity(group_.rank())) {}

  CoefficientModule(FiniteAbelianGroup group, IntMatrix action)
      : group_(std::move(group)), action_(std::move(action)) {
    const std::size_t k = group_.rank();
    if (action_.rows() != k || action_.cols() != k)
      throw std::invalid_argument("invalid action: matrix shape");
    const auto& f = group_.invariant_factors();
    // Column j is the image of a generator of order f[j].
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (mod(action_(i, j) * f[j], f[i]) != 0)
          throw std::invalid_argument("invalid action: not well defined on the group");
    if (!detail::subquotient(group_, action_, IntMatrix(k, k)).trivial())
      throw std::invalid_argument("invalid action: not an automorphism");
  }

  const FiniteAbelianGroup& group() const { return group_; }
  const IntMatrix& action() const { return action_; }

  bool trivial_action() const {
    return detail::same_endomorphism(group_, action_, IntMatrix::identity(group_.rank()));
  }
  bool order_divides(std::size_t m) const {
    return detail::same_endomorphism(group_, detail::power(action_, m),
                                     IntMatrix::identity(group_.rank()));
  }

 private:
  FiniteAbelianGroup group_;
  IntMatrix action_;
};

/// H^n(Z/m, A) from the periodic resolution, computed on the presentation
/// lattice for any action: H^0 = ker(T-1), odd degrees ker(N)/im(T-1),
/// positive even degrees ker(T-1)/im(N), with N = 1 + T + ... + T^(m-1).
inline FiniteAbelianGroup cyclic_cohomology_lattice(std::size_t m, const CoefficientModule& coeff,
                                                    std::size_t n) {
  if (m < 1) throw std::invalid_argument("cyclic group order must be at least 1");
  if (!coeff.order_divides(m))
    throw std::invalid_argument("invalid action: order does not divide " + std::to_string(m));
  const FiniteAbelianGroup& a = coeff.group();
  const std::size_t k = a.rank();
  const IntMatrix& t = coeff.action();
  const IntMatrix t_minus_1 = t - IntMatrix::identity(k);
  IntMatrix norm(k, k);
  IntMatrix p = IntMatrix::identity(k);
  for (std::size_t i = 0; i < m; ++i) {
    norm = norm + p;
    p = p * t;
  }
  if (n == 0) return detail::subquotient(a, t_minus_1, IntMatrix(k, k));
  if (n % 2 == 1) return detail::subquotient(a, norm, t_minus_1);
  return detail::subquotient(a, t_minus_1, norm);
}

/// H^n(Z/m, A). Trivial actions short-circuit to A (n = 0) or to the
/// m-torsion / A/mA, both the sum of Z/gcd(m, d_i).
inline FiniteAbelianGroup cyclic_cohomology(std::size_t m, const CoefficientModule& coeff,
                                            std::size_t n) {
  if (m < 1) throw std::invalid_argument("cyclic group order must be at least 1");
  if (!coeff.trivial_action()) return cyclic_cohomology_lattice(m, coeff, n);
  const FiniteAbelianGroup& a = coeff.group();
  if (n == 0) return a;
  std::vector<Integer> orders;
  for (const auto& d : a.invariant_factors()) orders.push_back(gcd(d, Integer(m)));
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

/// H^n(Z/m, C^x) with trivial action. C^x is divisible, so even degrees
/// vanish and odd degrees are the m-th roots of unity.
inline FiniteAbelianGroup cyclic_cohomology_units(std::size_t m, std::size_t n) {
  if (m < 1) throw std::invalid_argument("cyclic group order must be at least 1");
  if (n < 1) throw std::invalid_argument("H^0(G, C^x) is not finite");
  if (n % 2 == 0) return {};
  return FiniteAbelianGroup::cyclic(Integer(m));
}

}  // namespace fusion
