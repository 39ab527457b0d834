#pragma once

// Built-in fusion rings and bimodules.

#include "fusion/error.hpp"
#include "fusion/ring.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace fusion {

/// Group ring of a finite group given by its multiplication table
/// (identity at position 0).
inline FusionRing group_ring(const std::vector<std::vector<Index>>& table,
                             std::vector<std::string> labels) {
  const std::size_t q = table.size();
  if (labels.size() != q) throw StructureError("group ring: label count mismatch");
  Tensor3 n(q, q, q);
  std::vector<Index> dual(q, 0);
  for (Index a = 0; a < q; ++a)
    for (Index b = 0; b < q; ++b) {
      n(a, b, table[a][b]) = 1;
      if (table[a][b] == 0) dual[a] = b;
    }
  return FusionRing(std::move(labels), 0, std::move(dual), std::move(n));
}

namespace detail {

inline std::string power_label(const std::string& base, std::size_t e) {
  if (e == 0) return "1";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

}  // namespace detail

inline FusionRing cyclic_group_ring(std::size_t n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be at least 1");
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  std::vector<std::string> labels;
  for (Index a = 0; a < n; ++a) {
    labels.push_back(detail::power_label("g", a));
    for (Index b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return group_ring(table, std::move(labels));
}

inline FusionRing klein_four_ring() {
  std::vector<std::vector<Index>> table(4, std::vector<Index>(4));
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) table[a][b] = a ^ b;
  return group_ring(table, {"1", "a", "b", "ab"});
}

/// Group ring of S_3; elements are permutations of {0,1,2} in lexicographic order.
inline FusionRing symmetric_group_ring() {
  std::vector<std::array<int, 3>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<Index>> table(6, std::vector<Index>(6));
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<Index>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return group_ring(table, {"1", "(12)", "(01)", "(012)", "(021)", "(02)"});
}

inline FusionRing fibonacci() {
  Tensor3 n(2, 2, 2);
  n(0, 0, 0) = n(0, 1, 1) = n(1, 0, 1) = 1;
  n(1, 1, 0) = n(1, 1, 1) = 1;
  return FusionRing({"1", "tau"}, 0, {0, 1}, std::move(n));
}

inline FusionRing ising() {
  Tensor3 n(3, 3, 3);
  for (Index i = 0; i < 3; ++i) n(0, i, i) = n(i, 0, i) = 1;
  n(1, 1, 0) = 1;
  n(1, 2, 2) = n(2, 1, 2) = 1;
  n(2, 2, 0) = n(2, 2, 1) = 1;
  return FusionRing({"1", "g", "sigma"}, 0, {0, 1, 2}, std::move(n));
}

/// Basis 1, g, ..., g^(p-1), X with gX = X = Xg, g^p = 1, X^2 = sum g^i + p X.
inline FusionRing near_group_ring(std::size_t p) {
  if (p < 1) throw std::invalid_argument("near-group parameter must be at least 1");
  const std::size_t r = p + 1;
  const Index x = p;
  std::vector<std::string> labels;
  std::vector<Index> dual(r);
  for (Index i = 0; i < p; ++i) {
    labels.push_back(detail::power_label("g", i));
    dual[i] = (p - i) % p;
  }
  labels.push_back("X");
  dual[x] = x;
  Tensor3 n(r, r, r);
  for (Index i = 0; i < p; ++i) {
    for (Index j = 0; j < p; ++j) n(i, j, (i + j) % p) = 1;
    n(i, x, x) = n(x, i, x) = 1;
    n(x, x, i) = 1;
  }
  n(x, x, x) = Integer(p);
  return FusionRing(std::move(labels), 0, std::move(dual), std::move(n));
}

/// Basis a, b, gb, ..., g^(p-1)b with ga = a, Xa = sum g^i b and
/// X g^i b = a + sum g^j b; the right action is the mirror image.
inline FusionBimodule near_group_bimodule(std::size_t p) {
  auto ring = std::make_shared<const FusionRing>(near_group_ring(p));
  const std::size_t s = p + 1;
  const Index x = p;
  const Index a = 0;
  auto gb = [](Index i) { return Index{1} + i; };
  std::vector<std::string> labels{"a"};
  for (Index i = 0; i < p; ++i) labels.push_back(i == 0 ? "b" : detail::power_label("g", i) + "b");
  Tensor3 left(p + 1, s, s);
  for (Index i = 0; i < p; ++i) {
    left(i, a, a) = 1;
    for (Index j = 0; j < p; ++j) left(i, gb(j), gb((i + j) % p)) = 1;
  }
  for (Index j = 0; j < p; ++j) left(x, a, gb(j)) = 1;
  for (Index i = 0; i < p; ++i) {
    left(x, gb(i), a) = 1;
    for (Index j = 0; j < p; ++j) left(x, gb(i), gb(j)) = 1;
  }
  Tensor3 right = left;  // R_p is commutative
  return FusionBimodule(ring, ring, std::move(labels), std::move(left), std::move(right));
}

enum class EntryKind { ring, module };

struct CatalogEntry {
  std::string name;  // lookup key; <p>/<n> marks a parameter
  EntryKind kind;
  std::string parameters;
  std::string description;
};

inline std::vector<CatalogEntry> catalog() {
  return {
      {"cyclic:<n>", EntryKind::ring, "n >= 1", "group ring of Z/n"},
      {"klein-four", EntryKind::ring, "", "group ring of Z/2 x Z/2"},
      {"s3", EntryKind::ring, "", "group ring of the symmetric group on three letters"},
      {"fibonacci", EntryKind::ring, "", "{1, tau} with tau^2 = 1 + tau"},
      {"ising", EntryKind::ring, "", "{1, g, sigma} with sigma^2 = 1 + g, g sigma = sigma"},
      {"near-group:<p>", EntryKind::ring, "p >= 1", "Z/p near-group ring, X^2 = sum g^i + pX"},
      {"near-group-bimodule:<p>", EntryKind::module, "p >= 1",
       "bimodule a, b, gb, ... over near-group:<p>"},
      {"regular:<ring>", EntryKind::module, "any ring key", "a ring acting on itself"},
  };
}

namespace detail {

inline std::size_t parse_parameter(std::string_view key, std::string_view text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1)
    throw NotFoundError("catalog: bad parameter in '" + std::string(key) + "'");
  return value;
}

inline void require_valid(const FusionRing& ring, std::string_view key) {
  if (!verify_ring(ring).ok())
    throw std::logic_error("catalog ring '" + std::string(key) + "' fails verification");
}

}  // namespace detail

inline std::shared_ptr<const FusionRing> catalog_ring(std::string_view key) {
  auto make = [&]() -> FusionRing {
    if (key == "klein-four") return klein_four_ring();
    if (key == "s3") return symmetric_group_ring();
    if (key == "fibonacci") return fibonacci();
    if (key == "ising") return ising();
    if (key.starts_with("cyclic:"))
      return cyclic_group_ring(detail::parse_parameter(key, key.substr(7)));
    if (key.starts_with("near-group:"))
      return near_group_ring(detail::parse_parameter(key, key.substr(11)));
    throw NotFoundError("catalog: no ring named '" + std::string(key) + "'");
  };
  auto ring = std::make_shared<const FusionRing>(make());
  detail::require_valid(*ring, key);
  return ring;
}

inline FusionBimodule catalog_module(std::string_view key) {
  auto make = [&]() -> FusionBimodule {
    if (key.starts_with("near-group-bimodule:"))
      return near_group_bimodule(detail::parse_parameter(key, key.substr(20)));
    if (key.starts_with("regular:")) return regular_bimodule(catalog_ring(key.substr(8)));
    throw NotFoundError("catalog: no module named '" + std::string(key) + "'");
  };
  FusionBimodule mod = make();
  if (!verify_bimodule(mod).ok())
    throw std::logic_error("catalog module '" + std::string(key) + "' fails verification");
  return mod;
}

// Parameter instances used when the whole catalog is exercised.
inline std::vector<std::string> catalog_ring_instances() {
  std::vector<std::string> keys{"klein-four", "s3", "fibonacci", "ising"};
  for (int n = 1; n <= 8; ++n) keys.push_back("cyclic:" + std::to_string(n));
  for (int p = 1; p <= 7; ++p) keys.push_back("near-group:" + std::to_string(p));
  return keys;
}

inline std::vector<std::string> catalog_module_instances() {
  std::vector<std::string> keys;
  for (int p = 1; p <= 7; ++p) keys.push_back("near-group-bimodule:" + std::to_string(p));
  for (const auto& r : catalog_ring_instances()) keys.push_back("regular:" + r);
  return keys;
}

}  // namespace fusion
