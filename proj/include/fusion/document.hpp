#pragma once

// JSON documents for fusion rings and bimodules.
//
// Ring:   {"labels": [...], "unit": L, "dual": [...] (optional),
//          "n": [[i, j, k, mult], ...]}          i * j contains k
// Module: {"over": R | [R_left, R_right], "labels": [...],
//          "left": [[x, m, n, mult], ...],      x * m contains n
//          "right": [[m, y, n, mult], ...]}     m * y contains n
// where R is a catalog key or an inline ring document. Multiplicities are
// JSON integers, or decimal strings when they do not fit in 64 bits.

#include "fusion/catalog.hpp"
#include "fusion/error.hpp"
#include "fusion/ring.hpp"

#include <json.hpp>

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace fusion {

using Json = nlohmann::json;
using Triple = std::array<Index, 3>;

/// A parsed ring before axiom checks, with the JSON pointer of each n entry.
struct RingDocument {
  FusionRing ring;
  std::map<Triple, std::string> locations;
};

struct ModuleDocument {
  FusionBimodule module;
  std::map<Triple, std::string> left_locations, right_locations;
};

using RingResolver = std::function<std::shared_ptr<const FusionRing>(const std::string&)>;

namespace detail {

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Line and column of the failing byte.
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
}

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

inline const Json& member(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    fail(where.empty() ? "/" : where, std::string("missing field \"") + key + "\"");
  return *it;
}

inline std::vector<std::string> read_labels(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of labels");
  std::vector<std::string> out;
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    if (!j[i].is_string()) fail(at, "label must be a string");
    const std::string l = j[i].get<std::string>();
    if (seen.count(l)) fail(at, "duplicate label '" + l + "'");
    seen[l] = i;
    out.push_back(l);
  }
  return out;
}

inline Index lookup(const std::vector<std::string>& labels, const Json& j,
                    const std::string& where) {
  if (!j.is_string()) fail(where, "expected a label string");
  const std::string l = j.get<std::string>();
  auto it = std::find(labels.begin(), labels.end(), l);
  if (it == labels.end()) fail(where, "unknown label '" + l + "'");
  return static_cast<Index>(it - labels.begin());
}

inline Integer read_multiplicity(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    if (j.get<std::int64_t>() < 0) fail(where, "multiplicity must be non-negative");
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      fail(where, "multiplicity string must be a decimal integer");
    return Integer(s);
  }
  fail(where, "multiplicity must be a non-negative integer");
}

// Fills t from [a, b, c, mult] quadruples; the label lists give the three axes.
inline void read_triples(const Json& j, const std::string& where,
                         const std::array<const std::vector<std::string>*, 3>& axes,
                         Tensor3& t, std::map<Triple, std::string>& locations) {
  if (!j.is_array()) fail(where, "expected an array of [a, b, c, multiplicity] entries");
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string at = where + "/" + std::to_string(e);
    const Json& q = j[e];
    if (!q.is_array() || q.size() != 4) fail(at, "expected [a, b, c, multiplicity]");
    Triple idx{};
    for (int a = 0; a < 3; ++a) idx[a] = lookup(*axes[a], q[a], at + "/" + std::to_string(a));
    if (locations.count(idx)) fail(at, "duplicate entry (first at " + locations[idx] + ")");
    locations[idx] = at;
    t(idx[0], idx[1], idx[2]) = read_multiplicity(q[3], at + "/3");
  }
}

// The unique j with n[i][j][unit] = 1 for each i.
inline std::vector<Index> infer_dual(const Tensor3& n, Index unit, std::size_t r) {
  std::vector<Index> dual(r);
  for (Index i = 0; i < r; ++i) {
    std::optional<Index> found;
    for (Index j = 0; j < r; ++j) {
      if (n(i, j, unit) == 0) continue;
      if (n(i, j, unit) != 1 || found)
        throw AxiomError("cannot infer dual: unit appears more than once in products of row " +
                         std::to_string(i));
      found = j;
    }
    if (!found)
      throw AxiomError("cannot infer dual: no product of row " + std::to_string(i) +
                       " contains the unit");
    dual[i] = *found;
  }
  for (Index i = 0; i < r; ++i)
    if (dual[dual[i]] != i) throw AxiomError("cannot infer dual: rigidity pairing is not an involution");
  return dual;
}

inline RingDocument ring_from_json(const Json& doc, const std::string& where) {
  if (!doc.is_object()) fail(where.empty() ? "/" : where, "expected a ring object");
  auto labels = read_labels(member(doc, "labels", where), where + "/labels");
  const Index unit = lookup(labels, member(doc, "unit", where), where + "/unit");
  const std::size_t r = labels.size();
  Tensor3 n(r, r, r);
  RingDocument out{FusionRing({"1"}, 0, {0}, Tensor3(1, 1, 1)), {}};
  read_triples(member(doc, "n", where), where + "/n", {&labels, &labels, &labels}, n,
               out.locations);
  std::vector<Index> dual;
  if (auto it = doc.find("dual"); it != doc.end()) {
    if (!it->is_array() || it->size() != r)
      fail(where + "/dual", "expected one dual label per basis label");
    for (std::size_t i = 0; i < r; ++i)
      dual.push_back(lookup(labels, (*it)[i], where + "/dual/" + std::to_string(i)));
  } else {
    dual = infer_dual(n, unit, r);
  }
  out.ring = FusionRing(std::move(labels), unit, std::move(dual), std::move(n));
  return out;
}

inline std::string describe(const FusionRing& ring, const VerificationReport& report,
                            const std::map<Triple, std::string>& locations,
                            std::size_t limit = 20) {
  std::ostringstream os;
  os << report.violations.size() << " axiom violation(s)";
  for (std::size_t i = 0; i < report.violations.size() && i < limit; ++i) {
    const Violation& v = report.violations[i];
    os << "\n  " << axiom_name(v.axiom) << ": " << v.detail;
    if (v.witness.size() == 3) {
      const Triple t{v.witness[0], v.witness[1], v.witness[2]};
      if (auto it = locations.find(t); it != locations.end()) os << " [" << it->second << "]";
    }
  }
  if (report.violations.size() > limit)
    os << "\n  ... " << report.violations.size() - limit << " more";
  (void)ring;
  return os.str();
}

}  // namespace detail

/// Parses without checking axioms.
inline RingDocument read_ring_document(std::string_view text) {
  return detail::ring_from_json(detail::parse_json(text), "");
}

/// Parses and verifies; axiom failures are reported with entry locations.
inline FusionRing parse_ring(std::string_view text) {
  RingDocument doc = read_ring_document(text);
  const VerificationReport report = verify_ring(doc.ring);
  if (!report.ok()) throw AxiomError(detail::describe(doc.ring, report, doc.locations));
  return std::move(doc.ring);
}

inline std::shared_ptr<const FusionRing> default_resolver(const std::string& key) {
  return catalog_ring(key);
}

inline ModuleDocument read_module_document(std::string_view text,
                                           const RingResolver& resolve = default_resolver) {
  const Json doc = detail::parse_json(text);
  if (!doc.is_object()) detail::fail("/", "expected a module object");

  auto ring_at = [&](const Json& j, const std::string& where) -> std::shared_ptr<const FusionRing> {
    if (j.is_string()) {
      try {
        return resolve(j.get<std::string>());
      } catch (const NotFoundError& e) {
        detail::fail(where, e.what());
      }
    }
    RingDocument rd = detail::ring_from_json(j, where);
    const VerificationReport report = verify_ring(rd.ring);
    if (!report.ok())
      throw AxiomError(where + ": " + detail::describe(rd.ring, report, rd.locations));
    return std::make_shared<const FusionRing>(std::move(rd.ring));
  };
  const Json& over = detail::member(doc, "over", "");
  std::shared_ptr<const FusionRing> left_ring, right_ring;
  if (over.is_array()) {
    if (over.size() != 2) detail::fail("/over", "expected [left ring, right ring]");
    left_ring = ring_at(over[0], "/over/0");
    right_ring = ring_at(over[1], "/over/1");
  } else {
    left_ring = right_ring = ring_at(over, "/over");
  }

  auto labels = detail::read_labels(detail::member(doc, "labels", ""), "/labels");
  const std::size_t s = labels.size();
  std::map<Triple, std::string> left_loc, right_loc;
  std::optional<Tensor3> left, right;
  if (auto it = doc.find("left"); it != doc.end()) {
    left.emplace(left_ring->rank(), s, s);
    detail::read_triples(*it, "/left", {&left_ring->labels(), &labels, &labels}, *left, left_loc);
  }
  if (auto it = doc.find("right"); it != doc.end()) {
    // Stored as [m, y, n]; the tensor is indexed (y, m, n).
    Tensor3 raw(s, right_ring->rank(), s);
    std::map<Triple, std::string> raw_loc;
    detail::read_triples(*it, "/right", {&labels, &right_ring->labels(), &labels}, raw, raw_loc);
    right.emplace(right_ring->rank(), s, s);
    for (Index m = 0; m < s; ++m)
      for (Index y = 0; y < right_ring->rank(); ++y)
        for (Index n = 0; n < s; ++n) (*right)(y, m, n) = raw(m, y, n);
    for (const auto& [t, at] : raw_loc) right_loc[{t[1], t[0], t[2]}] = at;
  }
  if (!left && !right) detail::fail("/", "module needs a \"left\" or \"right\" action");
  return ModuleDocument{FusionBimodule(left_ring, right_ring, std::move(labels), std::move(left),
                                       std::move(right)),
                        std::move(left_loc), std::move(right_loc)};
}

inline FusionBimodule parse_module(std::string_view text,
                                   const RingResolver& resolve = default_resolver) {
  ModuleDocument doc = read_module_document(text, resolve);
  const VerificationReport report = verify_bimodule(doc.module);
  if (!report.ok()) {
    std::ostringstream os;
    os << report.violations.size() << " module axiom violation(s)";
    for (std::size_t i = 0; i < report.violations.size() && i < 20; ++i) {
      const Violation& v = report.violations[i];
      os << "\n  " << axiom_name(v.axiom) << ": " << v.detail;
      if (v.witness.size() == 3) {
        const Triple t{v.witness[0], v.witness[1], v.witness[2]};
        const auto& loc = v.detail.rfind("right", 0) == 0 ? doc.right_locations : doc.left_locations;
        if (auto it = loc.find(t); it != loc.end()) os << " [" << it->second << "]";
      }
    }
    throw AxiomError(os.str());
  }
  return std::move(doc.module);
}

namespace detail {

inline std::string quote(const std::string& s) { return Json(s).dump(); }

inline std::string multiplicity_text(const Integer& x) {
  if (x <= std::numeric_limits<std::uint64_t>::max()) return x.str();
  return "\"" + x.str() + "\"";
}

inline std::string label_list(const std::vector<std::string>& labels) {
  std::string out = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? ", " : "") + quote(labels[i]);
  return out + "]";
}

inline void write_entries(std::ostream& os, const std::vector<std::string>& entries,
                          const std::string& indent) {
  if (entries.empty()) {
    os << "[]";
    return;
  }
  os << "[\n";
  for (std::size_t i = 0; i < entries.size(); ++i)
    os << indent << "  " << entries[i] << (i + 1 < entries.size() ? ",\n" : "\n");
  os << indent << "]";
}

inline void write_ring(std::ostream& os, const FusionRing& ring, const std::string& indent) {
  const std::size_t r = ring.rank();
  std::vector<std::string> duals, entries;
  for (Index i = 0; i < r; ++i) duals.push_back(ring.label(ring.dual(i)));
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k)
        if (ring.n(i, j, k) != 0)
          entries.push_back("[" + quote(ring.label(i)) + ", " + quote(ring.label(j)) + ", " +
                            quote(ring.label(k)) + ", " + multiplicity_text(ring.n(i, j, k)) + "]");
  const std::string in = indent + "  ";
  os << "{\n"
     << in << "\"labels\": " << label_list(ring.labels()) << ",\n"
     << in << "\"unit\": " << quote(ring.label(ring.unit())) << ",\n"
     << in << "\"dual\": " << label_list(duals) << ",\n"
     << in << "\"n\": ";
  write_entries(os, entries, in);
  os << "\n" << indent << "}";
}

}  // namespace detail

/// Canonical document text: fixed key order, entries sorted by (i, j, k),
/// zero multiplicities omitted. Ends with a newline.
inline std::string serialize_ring(const FusionRing& ring) {
  std::ostringstream os;
  detail::write_ring(os, ring, "");
  os << "\n";
  return os.str();
}

inline std::string serialize_module(const FusionBimodule& mod) {
  std::ostringstream os;
  const std::size_t s = mod.rank();
  os << "{\n  \"over\": ";
  if (mod.single_ring()) {
    detail::write_ring(os, mod.left_ring(), "  ");
  } else {
    os << "[\n    ";
    detail::write_ring(os, mod.left_ring(), "    ");
    os << ",\n    ";
    detail::write_ring(os, mod.right_ring(), "    ");
    os << "\n  ]";
  }
  os << ",\n  \"labels\": " << detail::label_list(mod.labels());
  using detail::quote;
  if (mod.has_left()) {
    std::vector<std::string> entries;
    const FusionRing& lr = mod.left_ring();
    for (Index x = 0; x < lr.rank(); ++x)
      for (Index m = 0; m < s; ++m)
        for (Index n = 0; n < s; ++n)
          if (mod.l(x, m, n) != 0)
            entries.push_back("[" + quote(lr.label(x)) + ", " + quote(mod.label(m)) + ", " +
                              quote(mod.label(n)) + ", " + detail::multiplicity_text(mod.l(x, m, n)) +
                              "]");
    os << ",\n  \"left\": ";
    detail::write_entries(os, entries, "  ");
  }
  if (mod.has_right()) {
    std::vector<std::string> entries;
    const FusionRing& rr = mod.right_ring();
    for (Index m = 0; m < s; ++m)
      for (Index y = 0; y < rr.rank(); ++y)
        for (Index n = 0; n < s; ++n)
          if (mod.r(y, m, n) != 0)
            entries.push_back("[" + quote(mod.label(m)) + ", " + quote(rr.label(y)) + ", " +
                              quote(mod.label(n)) + ", " + detail::multiplicity_text(mod.r(y, m, n)) +
                              "]");
    os << ",\n  \"right\": ";
    detail::write_entries(os, entries, "  ");
  }
  os << "\n}\n";
  return os.str();
}

}  // namespace fusion
