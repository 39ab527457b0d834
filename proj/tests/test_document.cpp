#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace fusion;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

const char* kFibonacci = R"({
  "labels": ["1", "t"],
  "unit": "1",
  "dual": ["1", "t"],
  "n": [["1","1","1",1], ["1","t","t",1], ["t","1","t",1], ["t","t","1",1], ["t","t","t",1]]
})";

}  // namespace

TEST(Document, RingRoundTripOverCatalog) {
  for (const auto& key : catalog_ring_instances()) {
    const auto ring = catalog_ring(key);
    const std::string text = serialize_ring(*ring);
    const FusionRing back = parse_ring(text);
    EXPECT_EQ(back, *ring) << key;
    EXPECT_EQ(serialize_ring(back), text) << key;
  }
}

TEST(Document, ModuleRoundTripOverCatalog) {
  for (const auto& key : catalog_module_instances()) {
    const auto mod = catalog_module(key);
    const std::string text = serialize_module(mod);
    const FusionBimodule back = parse_module(text);
    EXPECT_EQ(back, mod) << key;
    EXPECT_EQ(serialize_module(back), text) << key;
  }
}

TEST(Document, NearGroupDocumentEqualsConstructor) {
  const std::string text = serialize_ring(near_group_ring(3));
  EXPECT_EQ(parse_ring(text), near_group_ring(3));
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_NE(text.find("[\"X\", \"X\", \"X\", 3]"), std::string::npos);
}

TEST(Document, LabelsMayDifferFromCatalog) {
  const auto ring = parse_ring(kFibonacci);
  EXPECT_EQ(ring.tensor(), fibonacci().tensor());
  EXPECT_EQ(ring.label(1), "t");
}

TEST(Document, DualIsInferred) {
  std::string text = kFibonacci;
  text.replace(text.find("\"dual\": [\"1\", \"t\"],"), 19, "");
  EXPECT_EQ(parse_ring(text).duals(), (std::vector<Index>{0, 1}));
  // Z/3 without dual: g g^2 = 1 pairs g with g^2.
  std::string z3 = serialize_ring(cyclic_group_ring(3));
  const auto start = z3.find("  \"dual\"");
  z3.erase(start, z3.find('\n', start) - start + 1);
  EXPECT_EQ(parse_ring(z3).duals(), (std::vector<Index>{0, 2, 1}));
}

TEST(Document, DualInferenceFailsWithoutRigidity) {
  const char* text = R"({"labels": ["1", "x"], "unit": "1",
    "n": [["1","1","1",1], ["1","x","x",1], ["x","1","x",1], ["x","x","x",1]]})";
  EXPECT_THROW(parse_ring(text), AxiomError);
}

TEST(Document, SyntaxErrorHasLineAndColumn) {
  const std::string msg = error_of([] { parse_ring("{\n  \"labels\": [\"1\",,\n}"); });
  EXPECT_NE(msg.find("line 2, column 18"), std::string::npos) << msg;
  EXPECT_THROW(parse_ring("{"), ParseError);
}

TEST(Document, DuplicateLabelIsNamed) {
  const std::string msg = error_of([] {
    parse_ring(R"({"labels": ["1", "x", "x"], "unit": "1", "n": []})");
  });
  EXPECT_NE(msg.find("duplicate label 'x'"), std::string::npos) << msg;
  EXPECT_NE(msg.find("/labels/2"), std::string::npos) << msg;
}

TEST(Document, UnknownLabelIsLocated) {
  const std::string msg = error_of([] {
    parse_ring(R"({"labels": ["1"], "unit": "1", "dual": ["1"], "n": [["1", "1", "y", 1]]})");
  });
  EXPECT_NE(msg.find("/n/0/2"), std::string::npos) << msg;
  EXPECT_NE(msg.find("unknown label 'y'"), std::string::npos) << msg;
}

TEST(Document, AxiomViolationsCarryEntryLocation) {
  std::string text = kFibonacci;
  const std::string entry = "[\"t\",\"1\",\"t\",1]";
  text.replace(text.find(entry), entry.size(), "[\"t\",\"1\",\"t\",2]");
  const std::string msg = error_of([&] { parse_ring(text); });
  EXPECT_NE(msg.find("unit-law"), std::string::npos) << msg;
  EXPECT_NE(msg.find("[/n/2]"), std::string::npos) << msg;
}

TEST(Document, BadMultiplicities) {
  EXPECT_THROW(parse_ring(R"({"labels": ["1"], "unit": "1", "dual": ["1"], "n": [["1","1","1",-1]]})"),
               ParseError);
  EXPECT_THROW(parse_ring(R"({"labels": ["1"], "unit": "1", "dual": ["1"], "n": [["1","1","1",1.5]]})"),
               ParseError);
  EXPECT_THROW(parse_ring(R"({"labels": ["1"], "unit": "1", "dual": ["1"], "n": [["1","1","1",1],["1","1","1",1]]})"),
               ParseError);
  const auto doc = read_ring_document(
      R"({"labels": ["1"], "unit": "1", "dual": ["1"], "n": [["1","1","1","123456789012345678901234567890"]]})");
  EXPECT_EQ(doc.ring.n(0, 0, 0), Integer("123456789012345678901234567890"));
  EXPECT_NE(serialize_ring(doc.ring).find("\"123456789012345678901234567890\""), std::string::npos);
}

TEST(Document, ModuleOverCatalogKeyAndPair) {
  const std::string text = R"({
    "over": "fibonacci",
    "labels": ["m", "n"],
    "left": [["1","m","m",1], ["1","n","n",1], ["tau","m","n",1], ["tau","n","m",1], ["tau","n","n",1]]
  })";
  const auto mod = parse_module(text);
  EXPECT_EQ(mod.rank(), 2u);
  EXPECT_FALSE(mod.has_right());
  const std::string pair = R"({
    "over": ["fibonacci", "cyclic:1"],
    "labels": ["m"],
    "right": [["m","1","m",1]]
  })";
  const auto two = parse_module(pair);
  EXPECT_FALSE(two.single_ring());
  EXPECT_EQ(two.r(0, 0, 0), 1);
  EXPECT_THROW(parse_module(R"({"over": "nowhere", "labels": ["m"], "left": []})"), ParseError);
}

TEST(Document, ModuleAxiomFailureIsLocated) {
  const std::string text = R"({
    "over": "fibonacci",
    "labels": ["rho"],
    "left": [["1","rho","rho",1], ["tau","rho","rho",2]]
  })";
  const std::string msg = error_of([&] { parse_module(text); });
  EXPECT_NE(msg.find("left-associativity"), std::string::npos) << msg;
}

TEST(Catalog, Lookup) {
  EXPECT_EQ(*catalog_ring("near-group:3"), near_group_ring(3));
  EXPECT_EQ(catalog_ring("ising")->rank(), 3u);
  EXPECT_THROW(catalog_ring("haagerup"), NotFoundError);
  EXPECT_THROW(catalog_ring("cyclic:0"), NotFoundError);
  EXPECT_THROW(catalog_ring("cyclic:x"), NotFoundError);
  EXPECT_THROW(catalog_module("near-group:3"), NotFoundError);
  EXPECT_FALSE(catalog().empty());
}
