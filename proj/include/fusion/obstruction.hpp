#pragma once

// Ring-level bounds on Inv(Z(C)) and vanishing certificates for the
// obstructions to Z/m-graded extensions.

#include "fusion/grading.hpp"
#include "fusion/homalg.hpp"
#include "fusion/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fusion {

/// First non-unit X with X = X*, X inside X X, and {1, X} generating the basis.
inline std::optional<Index> two_supertransitive_generator(const FusionRing& ring) {
  const std::size_t r = ring.rank();
  for (Index x = 0; x < r; ++x) {
    if (x == ring.unit() || ring.dual(x) != x || ring.n(x, x, x) < 1) continue;
    std::vector<bool> reached(r, false);
    reached[ring.unit()] = reached[x] = true;
    std::vector<Index> frontier{x};
    while (!frontier.empty()) {
      std::vector<Index> next;
      for (Index a : frontier)
        for (Index k = 0; k < r; ++k)
          if (!reached[k] && ring.n(a, x, k) > 0) {
            reached[k] = true;
            next.push_back(k);
          }
      frontier = std::move(next);
    }
    if (std::all_of(reached.begin(), reached.end(), [](bool b) { return b; })) return x;
  }
  return std::nullopt;
}

struct CenterBound {
  FiniteAbelianGroup kernel_part;             // Hom(U(C), C^x)
  std::vector<Index> cokernel_bound;          // invertibles with trivial conjugation
  std::vector<std::vector<Index>> cokernel_table;  // positions into cokernel_bound
  Integer order_bound = 1;
  std::optional<Integer> exact_order;

  Integer cokernel_order() const { return Integer(cokernel_bound.size()); }
};

/// Inv(Z(C)) sits between Hom(U(C), C^x) and the invertibles g whose
/// conjugation g - g* is isomorphic to the identity; at ring level only
/// the permutation shadow of that condition is visible.
inline CenterBound center_bound(const FusionRing& ring) {
  CenterBound b;
  b.kernel_part = character_group(ring);
  const InvertibleGroup inv = invertibles(ring);
  std::vector<std::size_t> keep;
  for (std::size_t p = 0; p < inv.order(); ++p) {
    const auto perm = conjugation_permutation(ring, inv.elements[p]);
    bool identity = true;
    for (Index i = 0; i < perm.size(); ++i)
      if (perm[i] != i) identity = false;
    if (identity) keep.push_back(p);
  }
  for (std::size_t p : keep) b.cokernel_bound.push_back(inv.elements[p]);
  b.cokernel_table.assign(keep.size(), std::vector<Index>(keep.size()));
  for (std::size_t x = 0; x < keep.size(); ++x)
    for (std::size_t y = 0; y < keep.size(); ++y) {
      const Index prod = inv.elements[inv.table[keep[x]][keep[y]]];
      auto it = std::find(b.cokernel_bound.begin(), b.cokernel_bound.end(), prod);
      b.cokernel_table[x][y] = static_cast<Index>(it - b.cokernel_bound.begin());
    }
  b.order_bound = b.kernel_part.order() * b.cokernel_order();
  if (b.order_bound == 1) b.exact_order = 1;
  return b;
}

enum class O3Status { vanishes_certified, group_possibly_nonzero, unknown };
enum class O4Status { vanishes_certified, unknown };

inline std::string_view status_name(O3Status s) {
  switch (s) {
    case O3Status::vanishes_certified: return "vanishes-certified";
    case O3Status::group_possibly_nonzero: return "group-possibly-nonzero";
    case O3Status::unknown: return "unknown";
  }
  return "unknown";
}

inline std::string_view status_name(O4Status s) {
  return s == O4Status::vanishes_certified ? "vanishes-certified (cyclic)" : "unknown";
}

// Facts about the category that the fusion ring cannot decide.
struct Assumptions {
  bool self_dual = false;
  bool trivial_out = false;
  // |Inv(Z(C))| when known from outside the ring data.
  std::optional<Integer> exact_center_order;
};

struct ObstructionReport {
  std::size_t group_order = 1;
  CenterBound center;
  O3Status o3_status = O3Status::unknown;
  O4Status o4_status = O4Status::unknown;
  std::vector<Integer> offending_primes;
  std::optional<Integer> extension_count;
  Assumptions assumptions;
  std::vector<std::string> narrative;
};

namespace detail {

inline std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> out;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

/// Status of o3 and o4 for G = Z/m and, when determined, the number of
/// extensions per bimodule: |H^3(G, C^x)| * |H^2(G, Inv Z(C))|.
inline ObstructionReport obstruction_report(const FusionRing& ring, std::size_t m,
                                            const Assumptions& assumptions = {}) {
  if (m < 1) throw std::invalid_argument("group order must be at least 1");
  ObstructionReport rep;
  rep.group_order = m;
  rep.assumptions = assumptions;
  rep.center = center_bound(ring);
  auto& say = rep.narrative;
  const CenterBound& cb = rep.center;
  const std::string g = "Z/" + std::to_string(m);

  say.push_back("assumptions: self-dual=" + std::string(assumptions.self_dual ? "yes" : "no") +
                ", trivial-Out=" + std::string(assumptions.trivial_out ? "yes" : "no") +
                (assumptions.exact_center_order
                     ? ", |Inv Z(C)|=" + assumptions.exact_center_order->str()
                     : std::string()));
  if (!(assumptions.self_dual && assumptions.trivial_out))
    say.push_back(
        "without self-duality and trivial outer automorphisms the bimodule is not known to "
        "define a homomorphism G -> BrPic(C); statuses below concern the obstruction groups only");

  if (cyclic_cohomology_units(m, 4).trivial()) {
    rep.o4_status = O4Status::vanishes_certified;
    say.push_back("o4: H^4(" + g + ", C^x) = 0 because G is cyclic");
  }

  say.push_back("Hom(U(C), C^x) = " + cb.kernel_part.to_string());
  say.push_back("invertibles with trivial conjugation action: order " + cb.cokernel_order().str());
  say.push_back("|Inv Z(C)| divides " + cb.order_bound.str());

  std::optional<Integer> exact = cb.exact_order;
  if (assumptions.exact_center_order) {
    if (cb.order_bound % *assumptions.exact_center_order != 0)
      throw std::invalid_argument("supplied |Inv Z(C)| does not divide the ring-level bound");
    exact = assumptions.exact_center_order;
  }

  const Integer shared = gcd(Integer(m), exact ? *exact : cb.order_bound);
  bool h2_trivial = false;
  if (exact && *exact == 1) {
    rep.o3_status = O3Status::vanishes_certified;
    h2_trivial = cyclic_cohomology(m, CoefficientModule(FiniteAbelianGroup{}), 2).trivial();
    say.push_back("o3: Inv Z(C) is trivial, so H^3(" + g + ", Inv Z(C)) = 0");
  } else if (shared == 1) {
    rep.o3_status = O3Status::vanishes_certified;
    h2_trivial = true;
    say.push_back("o3: gcd(" + std::to_string(m) + ", " +
                  (exact ? *exact : cb.order_bound).str() +
                  ") = 1 and H^n(G, A) is killed by |G| and |A|, so H^3 and H^2 vanish for every "
                  "action");
  } else {
    rep.o3_status = O3Status::group_possibly_nonzero;
    rep.offending_primes = detail::prime_factors(shared);
    std::string primes;
    for (const auto& p : rep.offending_primes) primes += (primes.empty() ? "" : ",") + p.str();
    say.push_back("o3: gcd(" + std::to_string(m) + ", " +
                  (exact ? *exact : cb.order_bound).str() + ") = " + shared.str() +
                  "; primes " + primes + " can support a nonzero obstruction group");
    // Trivial-action values for the largest abelian group the bound allows.
    if (!exact) {
      const FiniteAbelianGroup a =
          cb.kernel_part.direct_sum(abelianization(cb.cokernel_table));
      if (a.order() == cb.order_bound)
        say.push_back("for example H^3(" + g + ", " + a.to_string() +
                      ") with trivial action is " +
                      cyclic_cohomology(m, CoefficientModule(a), 3).to_string());
    }
  }

  if (rep.o3_status == O3Status::vanishes_certified &&
      rep.o4_status == O4Status::vanishes_certified && h2_trivial) {
    rep.extension_count = cyclic_cohomology_units(m, 3).order();
    say.push_back("extensions per bimodule: |H^3(" + g + ", C^x)| * |H^2(" + g +
                  ", Inv Z(C))| = " + rep.extension_count->str() +
                  " (the choice of alpha is counted by H^3(G, C^x))");
  }
  return rep;
}

}  // namespace fusion
