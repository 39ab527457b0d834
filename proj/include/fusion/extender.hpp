#pragma once

// Z/2-graded fusion rings assembled from an even ring, a bimodule over it,
// and an involution on the bimodule basis (the dual data of the odd part).

#include "fusion/ring.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace fusion {

namespace detail {

inline bool close(double a, double b, double rel = 1e-6) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace detail

/// Solves d(X) d(m) = sum_n l[X][m][n] d(n) by power iteration on the action
/// matrix, scaled so that sum of d(m)^2 equals the global dimension of the ring.
inline std::vector<double> module_dimensions(const FusionBimodule& mod, const FpVector& fp,
                                             const FpOptions& opts = {}) {
  const bool use_left = mod.has_left();
  const FusionRing& ring = use_left ? mod.left_ring() : mod.right_ring();
  auto act = [&](Index i, Index m, Index n) -> const Integer& {
    return use_left ? mod.l(i, m, n) : mod.r(i, m, n);
  };
  const std::size_t s = mod.rank();
  std::vector<std::vector<double>> b(s, std::vector<double>(s, 0.0));
  for (Index i = 0; i < ring.rank(); ++i)
    for (Index m = 0; m < s; ++m)
      for (Index n = 0; n < s; ++n)
        if (act(i, m, n) != 0) b[m][n] += act(i, m, n).convert_to<double>();
  std::size_t iterations = 0;
  std::vector<double> d = detail::perron_vector(b, 0, opts, iterations);

  auto consistent = [&](const FusionRing& rg, bool left) {
    for (Index i = 0; i < rg.rank(); ++i)
      for (Index m = 0; m < s; ++m) {
        double sum = 0;
        for (Index n = 0; n < s; ++n) {
          const Integer& c = left ? mod.l(i, m, n) : mod.r(i, m, n);
          if (c != 0) sum += c.convert_to<double>() * d[n];
        }
        if (!detail::close(fp[i] * d[m], sum)) return false;
      }
    return true;
  };
  if (fp.dims.size() != ring.rank())
    throw std::invalid_argument("module dimensions: FP vector does not match the ring");
  if (mod.has_left() && !consistent(mod.left_ring(), true))
    throw AxiomError("module dimensions: no vector satisfies the left action relations");
  if (mod.has_right() && mod.single_ring() && !consistent(mod.right_ring(), false))
    throw AxiomError("module dimensions: no vector satisfies the right action relations");

  double sq = 0;
  for (double x : d) sq += x * x;
  const double scale = std::sqrt(fp.global_dimension() / sq);
  for (double& x : d) x *= scale;
  return d;
}

namespace detail {

inline void require_single_ring_bimodule(const FusionBimodule& mod) {
  if (!mod.has_left() || !mod.has_right() || !mod.single_ring())
    throw std::invalid_argument("extension search needs a two-sided bimodule over one ring");
}

// sigma compatible on the pair (m, n): l[i][m][n] = r[i*][sigma m][sigma n] for all i.
inline bool compatible_pair(const FusionBimodule& mod, const std::vector<Index>& sigma, Index m,
                            Index n) {
  const FusionRing& ring = mod.left_ring();
  for (Index i = 0; i < ring.rank(); ++i)
    if (mod.l(i, m, n) != mod.r(ring.dual(i), sigma[m], sigma[n])) return false;
  return true;
}

}  // namespace detail

/// All involutions of the bimodule basis that preserve dimension and satisfy
/// (X m)* = m* X* at the level of multiplicities. Enumerated by pairing
/// within equal-dimension blocks, with pruning on each partial assignment.
inline std::vector<std::vector<Index>> involution_candidates(const FusionBimodule& mod,
                                                             const FpVector& fp) {
  detail::require_single_ring_bimodule(mod);
  const std::vector<double> dims = module_dimensions(mod, fp);
  const std::size_t s = mod.rank();
  constexpr Index unset = static_cast<Index>(-1);
  std::vector<Index> sigma(s, unset);
  std::vector<std::vector<Index>> out;

  auto consistent_with = [&](Index a) {
    for (Index x = 0; x < s; ++x) {
      if (sigma[x] == unset) continue;
      if (!detail::compatible_pair(mod, sigma, a, x) || !detail::compatible_pair(mod, sigma, x, a))
        return false;
    }
    return true;
  };

  std::function<void()> extend = [&] {
    Index m = 0;
    while (m < s && sigma[m] != unset) ++m;
    if (m == s) {
      out.push_back(sigma);
      return;
    }
    for (Index n = m; n < s; ++n) {
      if (sigma[n] != unset || !detail::close(dims[m], dims[n])) continue;
      sigma[m] = n;
      sigma[n] = m;
      if (consistent_with(m) && consistent_with(n)) extend();
      sigma[m] = sigma[n] = unset;
    }
  };
  extend();
  return out;
}

/// A Z/2-graded fusion ring: even indices come first in `full`, then the
/// odd (bimodule) indices in bimodule order.
struct GradedFusionRing {
  FusionRing even;
  std::vector<std::string> odd_labels;
  std::vector<Index> sigma;
  FusionRing full;
  FpVector dims;

  std::size_t even_rank() const { return even.rank(); }
  bool is_odd(Index i) const { return i >= even.rank(); }
  Index odd_index(Index m) const { return even.rank() + m; }
};

struct BuildOutcome {
  std::optional<GradedFusionRing> extension;
  VerificationReport report;

  bool ok() const { return extension.has_value(); }
};

/// Full structure constants on even + odd: the even ring, both module
/// actions, and odd*odd via reciprocity, N[m][n][x] = l[x][sigma n][m].
inline FusionRing assemble_graded_ring(const FusionRing& even, const FusionBimodule& mod,
                                       const std::vector<Index>& sigma) {
  detail::require_single_ring_bimodule(mod);
  const std::size_t r = even.rank(), s = mod.rank(), R = r + s;
  if (sigma.size() != s) throw StructureError("involution has wrong length");
  for (Index x : sigma)
    if (x >= s) throw StructureError("involution entry out of range");
  if (!(mod.left_ring() == even)) throw StructureError("bimodule is not over the even ring");

  std::vector<std::string> labels = even.labels();
  labels.insert(labels.end(), mod.labels().begin(), mod.labels().end());
  std::vector<Index> dual = even.duals();
  for (Index m = 0; m < s; ++m) dual.push_back(r + sigma[m]);
  Tensor3 n(R, R, R);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k) n(i, j, k) = even.n(i, j, k);
  for (Index x = 0; x < r; ++x)
    for (Index m = 0; m < s; ++m)
      for (Index q = 0; q < s; ++q) {
        n(x, r + m, r + q) = mod.l(x, m, q);
        n(r + m, x, r + q) = mod.r(x, m, q);
      }
  for (Index m = 0; m < s; ++m)
    for (Index q = 0; q < s; ++q)
      for (Index x = 0; x < r; ++x) n(r + m, r + q, x) = mod.l(x, sigma[q], m);
  return FusionRing(std::move(labels), even.unit(), std::move(dual), std::move(n));
}

/// Assembles and checks one candidate. Failure is a report, not an exception.
inline BuildOutcome build_extension(const FusionRing& even, const FusionBimodule& mod,
                                    const std::vector<Index>& sigma, const FpOptions& opts = {}) {
  BuildOutcome out;
  FusionRing full = assemble_graded_ring(even, mod, sigma);
  out.report = verify_ring(full);

  const std::size_t r = even.rank(), R = full.rank();
  auto parity = [r](Index i) { return i >= r ? 1 : 0; };
  for (Index i = 0; i < R; ++i)
    for (Index j = 0; j < R; ++j)
      for (Index k = 0; k < R; ++k)
        if (full.n(i, j, k) != 0 && (parity(i) ^ parity(j)) != parity(k))
          out.report.violations.push_back({Axiom::grading, {i, j, k}, "product crosses degrees"});
  if (!out.report.ok()) return out;

  FpVector dims = fp_dimensions(full, opts);
  double even_sq = 0, odd_sq = 0;
  for (Index i = 0; i < R; ++i) (i < r ? even_sq : odd_sq) += dims[i] * dims[i];
  if (std::abs(even_sq - odd_sq) > 10 * opts.tolerance * std::max(1.0, even_sq)) {
    out.report.violations.push_back({Axiom::dimension_balance, {},
                                     "even and odd components have different dimensions"});
    return out;
  }
  out.extension = GradedFusionRing{even, mod.labels(), sigma, std::move(full), std::move(dims)};
  return out;
}

/// Whether a relabeling of the odd basis, fixing the even basis pointwise,
/// carries the structure constants of `a` onto those of `b`.
inline bool isomorphic_fixing_even(const GradedFusionRing& a, const GradedFusionRing& b) {
  if (!(a.even == b.even) || a.full.rank() != b.full.rank()) return false;
  const std::size_t r = a.even_rank(), R = a.full.rank();
  constexpr Index unset = static_cast<Index>(-1);
  std::vector<Index> pi(R, unset);
  std::vector<bool> used(R, false);
  for (Index i = 0; i < r; ++i) {
    pi[i] = i;
    used[i] = true;
  }
  auto consistent = [&](Index o) {
    for (Index i = 0; i < R; ++i) {
      if (pi[i] == unset) continue;
      for (Index j = 0; j < R; ++j) {
        if (pi[j] == unset) continue;
        for (Index k = 0; k < R; ++k) {
          if (pi[k] == unset || (i != o && j != o && k != o)) continue;
          if (a.full.n(i, j, k) != b.full.n(pi[i], pi[j], pi[k])) return false;
        }
      }
    }
    return a.full.dual(o) < r || pi[a.full.dual(o)] == unset ||
           pi[a.full.dual(o)] == b.full.dual(pi[o]);
  };
  std::function<bool(Index)> place = [&](Index o) -> bool {
    if (o == R) return true;
    for (Index t = r; t < R; ++t) {
      if (used[t] || !detail::close(a.dims[o], b.dims[t])) continue;
      pi[o] = t;
      used[t] = true;
      if (consistent(o) && place(o + 1)) return true;
      pi[o] = unset;
      used[t] = false;
    }
    return false;
  };
  return place(r);
}

struct SearchOptions {
  std::size_t jobs = 1;
  FpOptions fp;
};

struct ExtensionSearch {
  std::vector<std::vector<Index>> candidates;
  std::vector<BuildOutcome> outcomes;           // one per candidate, same order
  std::vector<GradedFusionRing> rings;          // distinct up to odd relabeling
  std::vector<std::optional<std::size_t>> ring_of_candidate;
};

/// Builds every involution candidate (in parallel when jobs > 1; results
/// keep candidate order) and keeps one ring per isomorphism class.
inline ExtensionSearch search_extensions(const FusionRing& even, const FusionBimodule& mod,
                                         const SearchOptions& opts = {}) {
  ExtensionSearch out;
  const FpVector fp = fp_dimensions(even, opts.fp);
  out.candidates = involution_candidates(mod, fp);
  const std::size_t c = out.candidates.size();
  out.outcomes.resize(c);

  const std::size_t jobs = std::max<std::size_t>(1, std::min(opts.jobs, c));
  if (jobs == 1) {
    for (std::size_t i = 0; i < c; ++i)
      out.outcomes[i] = build_extension(even, mod, out.candidates[i], opts.fp);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < c; i += jobs)
          out.outcomes[i] = build_extension(even, mod, out.candidates[i], opts.fp);
      });
    for (auto& t : pool) t.join();
  }

  out.ring_of_candidate.assign(c, std::nullopt);
  for (std::size_t i = 0; i < c; ++i) {
    if (!out.outcomes[i].ok()) continue;
    const GradedFusionRing& g = *out.outcomes[i].extension;
    for (std::size_t k = 0; k < out.rings.size() && !out.ring_of_candidate[i]; ++k)
      if (isomorphic_fixing_even(g, out.rings[k])) out.ring_of_candidate[i] = k;
    if (!out.ring_of_candidate[i]) {
      out.ring_of_candidate[i] = out.rings.size();
      out.rings.push_back(g);
    }
  }
  return out;
}

}  // namespace fusion
