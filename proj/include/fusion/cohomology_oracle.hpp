#pragma once

// Exhaustive cochain enumeration for H^n(Z/m, A), independent of the
// lattice computation in homalg.hpp. Only practical for tiny groups.

#include "fusion/homalg.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace fusion {

namespace detail {

// Elements of Z/d_1 + ... + Z/d_t encoded in mixed radix.
class SmallAbelian {
 public:
  explicit SmallAbelian(const CoefficientModule& coeff, std::size_t m) {
    for (const auto& d : coeff.group().invariant_factors()) {
      if (d > 1 << 16) throw std::invalid_argument("oracle: coefficient group too large");
      radix_.push_back(d.convert_to<std::uint64_t>());
    }
    size_ = 1;
    for (auto d : radix_) size_ *= d;
    add_.assign(size_ * size_, 0);
    for (std::uint64_t x = 0; x < size_; ++x)
      for (std::uint64_t y = 0; y < size_; ++y) {
        auto a = decode(x), b = decode(y);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % radix_[i];
        add_[x * size_ + y] = encode(a);
      }
    // act_[k][x] = T^k x
    const std::size_t t = radix_.size();
    act_.assign(m, std::vector<std::uint64_t>(size_));
    for (std::uint64_t x = 0; x < size_; ++x) act_[0][x] = x;
    for (std::size_t k = 1; k < m; ++k)
      for (std::uint64_t x = 0; x < size_; ++x) {
        const auto v = decode(act_[k - 1][x]);
        std::vector<std::uint64_t> w(t, 0);
        for (std::size_t i = 0; i < t; ++i) {
          Integer s = 0;
          for (std::size_t j = 0; j < t; ++j) s += coeff.action()(i, j) * Integer(v[j]);
          w[i] = mod(s, Integer(radix_[i])).convert_to<std::uint64_t>();
        }
        act_[k][x] = encode(w);
      }
  }

  std::uint64_t size() const { return size_; }
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const { return add_[x * size_ + y]; }
  std::uint64_t neg(std::uint64_t x) const {
    for (std::uint64_t y = 0; y < size_; ++y)
      if (add(x, y) == 0) return y;
    return 0;
  }
  std::uint64_t act(std::size_t k, std::uint64_t x) const { return act_[k][x]; }

 private:
  std::vector<std::uint64_t> decode(std::uint64_t x) const {
    std::vector<std::uint64_t> v(radix_.size());
    for (std::size_t i = 0; i < radix_.size(); ++i) {
      v[i] = x % radix_[i];
      x /= radix_[i];
    }
    return v;
  }
  std::uint64_t encode(const std::vector<std::uint64_t>& v) const {
    std::uint64_t x = 0;
    for (std::size_t i = radix_.size(); i-- > 0;) x = x * radix_[i] + v[i];
    return x;
  }

  std::vector<std::uint64_t> radix_;
  std::uint64_t size_ = 1;
  std::vector<std::uint64_t> add_;
  std::vector<std::vector<std::uint64_t>> act_;
};

// Normalized n-cochains on Z/m: values on tuples of non-identity elements.
struct CochainSpace {
  std::size_t m, n, slots;

  CochainSpace(std::size_t m_, std::size_t n_) : m(m_), n(n_), slots(1) {
    for (std::size_t i = 0; i < n; ++i) slots *= m - 1;
  }

  // Slot of a tuple of group elements, or -1 when some entry is the identity.
  long slot(const std::vector<std::size_t>& g) const {
    long s = 0;
    for (std::size_t i = g.size(); i-- > 0;) {
      if (g[i] == 0) return -1;
      s = s * static_cast<long>(m - 1) + static_cast<long>(g[i] - 1);
    }
    return s;
  }
};

inline std::uint64_t checked_power(std::uint64_t base, std::size_t e, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

// Invariant factors from prime-power cyclic summands, without Smith form.
inline FiniteAbelianGroup assemble_prime_powers(
    const std::map<std::uint64_t, std::vector<std::uint64_t>>& exponents) {
  std::size_t t = 0;
  for (const auto& [p, es] : exponents) t = std::max(t, es.size());
  std::vector<Integer> factors(t, 1);
  for (const auto& [p, es] : exponents) {
    std::vector<std::uint64_t> sorted = es;
    std::sort(sorted.begin(), sorted.end());
    // Largest exponents go to the last factor.
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      Integer q = 1;
      for (std::uint64_t e = 0; e < sorted[i]; ++e) q *= p;
      factors[t - sorted.size() + i] *= q;
    }
  }
  std::vector<Integer> out;
  for (auto& f : factors)
    if (f > 1) out.push_back(f);
  return FiniteAbelianGroup(std::move(out));
}

}  // namespace detail

inline constexpr std::uint64_t kBruteForceCap = 1u << 20;

/// Cocycles modulo coboundaries by exhaustive enumeration of normalized
/// cochains. Throws when |A|^((m-1)^n) exceeds `cap`.
inline FiniteAbelianGroup brute_force_cohomology(std::size_t m, const CoefficientModule& coeff,
                                                 std::size_t n,
                                                 std::uint64_t cap = kBruteForceCap) {
  if (m < 1) throw std::invalid_argument("cyclic group order must be at least 1");
  if (!coeff.order_divides(m)) throw std::invalid_argument("invalid action");
  const detail::SmallAbelian a(coeff, m);
  const detail::CochainSpace cn(m, n);
  const std::uint64_t count = detail::checked_power(a.size(), cn.slots, cap);
  if (count > cap) throw std::invalid_argument("oracle: search space exceeds cap");

  auto decode = [&](std::uint64_t code, std::size_t slots) {
    std::vector<std::uint64_t> f(slots);
    for (std::size_t i = 0; i < slots; ++i) {
      f[i] = code % a.size();
      code /= a.size();
    }
    return f;
  };
  auto encode = [&](const std::vector<std::uint64_t>& f) {
    std::uint64_t c = 0;
    for (std::size_t i = f.size(); i-- > 0;) c = c * a.size() + f[i];
    return c;
  };

  // (delta f)(g_1..g_{k+1}) = g_1 f(g_2..) + sum (-1)^i f(..g_i g_{i+1}..) + (-1)^(k+1) f(g_1..g_k),
  // tabulated once per degree as (action power, sign, source slot) terms.
  struct Term {
    std::size_t action;
    bool negate;
    std::size_t src;
  };
  auto coboundary_terms = [&](std::size_t k) {
    const detail::CochainSpace src(m, k), dst(m, k + 1);
    std::vector<std::vector<Term>> terms(dst.slots);
    std::vector<std::size_t> g(k + 1, 1);
    auto push = [&](std::vector<Term>& out, std::size_t action, bool negate,
                    const std::vector<std::size_t>& h) {
      const long sl = src.slot(h);
      if (sl >= 0) out.push_back({action, negate, static_cast<std::size_t>(sl)});
    };
    for (std::size_t idx = 0; idx < dst.slots; ++idx) {
      std::size_t rest = idx;
      for (std::size_t i = 0; i <= k; ++i) {
        g[i] = 1 + rest % (m - 1);
        rest /= m - 1;
      }
      auto& out = terms[static_cast<std::size_t>(dst.slot(g))];
      push(out, g[0], false, std::vector<std::size_t>(g.begin() + 1, g.end()));
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::size_t> h;
        for (std::size_t j = 0; j < i; ++j) h.push_back(g[j]);
        h.push_back((g[i] + g[i + 1]) % m);
        for (std::size_t j = i + 2; j <= k; ++j) h.push_back(g[j]);
        push(out, 0, (i + 1) % 2 == 1, h);
      }
      push(out, 0, (k + 1) % 2 == 1, std::vector<std::size_t>(g.begin(), g.end() - 1));
    }
    return terms;
  };
  std::vector<std::uint64_t> negation(a.size());
  for (std::uint64_t x = 0; x < a.size(); ++x) negation[x] = a.neg(x);
  auto evaluate = [&](const std::vector<Term>& ts, const std::vector<std::uint64_t>& f) {
    std::uint64_t acc = 0;
    for (const Term& t : ts) {
      const std::uint64_t v = a.act(t.action, f[t.src]);
      acc = a.add(acc, t.negate ? negation[v] : v);
    }
    return acc;
  };
  auto coboundary = [&](const std::vector<std::uint64_t>& f,
                        const std::vector<std::vector<Term>>& terms) {
    std::vector<std::uint64_t> out(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) out[i] = evaluate(terms[i], f);
    return out;
  };

  std::vector<std::uint64_t> cocycles;
  const auto cocycle_terms = m > 1 ? coboundary_terms(n) : std::vector<std::vector<Term>>{};
  for (std::uint64_t code = 0; code < count; ++code) {
    const auto f = decode(code, cn.slots);
    const bool closed = std::all_of(cocycle_terms.begin(), cocycle_terms.end(),
                                    [&](const std::vector<Term>& ts) { return evaluate(ts, f) == 0; });
    if (closed) cocycles.push_back(code);
  }

  std::unordered_set<std::uint64_t> boundaries{0};
  if (n >= 1 && m > 1) {
    const detail::CochainSpace prev(m, n - 1);
    const std::uint64_t pcount = detail::checked_power(a.size(), prev.slots, cap);
    if (pcount > cap) throw std::invalid_argument("oracle: search space exceeds cap");
    const auto terms = coboundary_terms(n - 1);
    for (std::uint64_t code = 0; code < pcount; ++code)
      boundaries.insert(encode(coboundary(decode(code, prev.slots), terms)));
  }

  auto scale = [&](std::uint64_t code, std::uint64_t k) {
    auto f = decode(code, cn.slots);
    for (auto& x : f) {
      std::uint64_t s = 0;
      for (std::uint64_t i = 0; i < k; ++i) s = a.add(s, x);
      x = s;
    }
    return encode(f);
  };

  // |Q| = |Z| / |B|; |Q[k]| = #{z : k z in B} / |B|.
  const std::uint64_t qorder = cocycles.size() / boundaries.size();
  auto torsion_size = [&](std::uint64_t k) {
    std::uint64_t c = 0;
    for (auto z : cocycles)
      if (boundaries.count(scale(z, k))) ++c;
    return c / boundaries.size();
  };

  std::map<std::uint64_t, std::vector<std::uint64_t>> exponents;
  std::uint64_t rest = qorder;
  for (std::uint64_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    std::uint64_t pe = 1, total = 0;
    while (rest % p == 0) {
      rest /= p;
      pe *= p;
      ++total;
    }
    // c_j = log_p |Q[p^j]|; factors of exponent >= j number c_j - c_{j-1}.
    std::vector<std::uint64_t> c{0};
    std::uint64_t pj = 1;
    while (c.back() < total) {
      pj *= p;
      std::uint64_t size = torsion_size(pj), lg = 0;
      while (size > 1) {
        size /= p;
        ++lg;
      }
      c.push_back(lg);
    }
    std::vector<std::uint64_t> at_least;
    for (std::size_t j = 1; j < c.size(); ++j) at_least.push_back(c[j] - c[j - 1]);
    for (std::size_t j = 0; j < at_least.size(); ++j) {
      const std::uint64_t next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
      for (std::uint64_t r = 0; r < at_least[j] - next; ++r) exponents[p].push_back(j + 1);
    }
  }
  return detail::assemble_prime_powers(exponents);
}

}  // namespace fusion
