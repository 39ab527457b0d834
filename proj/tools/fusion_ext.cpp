// fusion-ext: fusion ring invariants, extension obstructions and
// Z/2-graded extension search from the command line.

#include "fusion/fusion.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using fusion::Index;
using fusion::Integer;
using OJson = nlohmann::ordered_json;
namespace fs = std::filesystem;

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kAxiom = 3, kNumerical = 4 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::size_t jobs = 1;
  double tolerance = 1e-10;
  bool json() const { return format == "json"; }
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw UsageError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_file(const std::string& src) { return fs::is_regular_file(src); }

std::shared_ptr<const fusion::FusionRing> resolve_ring(const std::string& src,
                                                        const fs::path& base) {
  const fs::path candidate = base / src;
  if (fs::is_regular_file(candidate))
    return std::make_shared<const fusion::FusionRing>(fusion::parse_ring(read_file(candidate)));
  return fusion::catalog_ring(src);
}

fusion::RingDocument load_ring_unverified(const std::string& src) {
  if (is_file(src)) return fusion::read_ring_document(read_file(src));
  try {
    return {*fusion::catalog_ring(src), {}};
  } catch (const fusion::NotFoundError&) {
    throw UsageError("'" + src + "' is neither a file nor a catalog ring");
  }
}

std::shared_ptr<const fusion::FusionRing> load_ring(const std::string& src) {
  if (is_file(src))
    return std::make_shared<const fusion::FusionRing>(fusion::parse_ring(read_file(src)));
  try {
    return fusion::catalog_ring(src);
  } catch (const fusion::NotFoundError&) {
    throw UsageError("'" + src + "' is neither a file nor a catalog ring");
  }
}

fusion::RingResolver resolver_for(const std::string& src) {
  const fs::path base = is_file(src) ? fs::path(src).parent_path() : fs::path(".");
  return [base](const std::string& key) { return resolve_ring(key, base); };
}

fusion::FusionBimodule load_module(const std::string& src) {
  if (is_file(src)) return fusion::parse_module(read_file(src), resolver_for(src));
  try {
    return fusion::catalog_module(src);
  } catch (const fusion::NotFoundError&) {
    throw UsageError("'" + src + "' is neither a file nor a catalog module");
  }
}

std::string fixed(double x, int digits = 10) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

std::string labels_of(const fusion::FusionRing& ring, const std::vector<Index>& idx) {
  std::string out;
  for (Index i : idx) out += (out.empty() ? "" : " ") + ring.label(i);
  return out;
}

OJson labels_json(const fusion::FusionRing& ring, const std::vector<Index>& idx) {
  OJson a = OJson::array();
  for (Index i : idx) a.push_back(ring.label(i));
  return a;
}

OJson group_json(const fusion::FiniteAbelianGroup& g) {
  OJson a = OJson::array();
  for (const auto& d : g.invariant_factors()) a.push_back(d.str());
  return a;
}

OJson assumptions_json(const fusion::Assumptions& a) {
  OJson j;
  j["self_dual"] = a.self_dual;
  j["trivial_out"] = a.trivial_out;
  if (a.exact_center_order) j["exact_center_order"] = a.exact_center_order->str();
  return j;
}

std::string assumptions_text(const fusion::Assumptions& a) {
  std::string s = std::string("assume-self-dual=") + (a.self_dual ? "yes" : "no") +
                  " assume-trivial-out=" + (a.trivial_out ? "yes" : "no");
  if (a.exact_center_order) s += " exact-center-order=" + a.exact_center_order->str();
  return s;
}

void emit(const Options& opt, const OJson& j, const std::string& text) {
  if (opt.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// ---- subcommands ----------------------------------------------------------

int cmd_catalog(const Options& opt, const std::string& show) {
  if (!show.empty()) {
    try {
      std::cout << fusion::serialize_ring(*fusion::catalog_ring(show));
    } catch (const fusion::NotFoundError&) {
      std::cout << fusion::serialize_module(fusion::catalog_module(show));
    }
    return kOk;
  }
  OJson j = OJson::array();
  std::ostringstream os;
  for (const auto& e : fusion::catalog()) {
    OJson item;
    item["name"] = e.name;
    item["kind"] = e.kind == fusion::EntryKind::ring ? "ring" : "module";
    item["parameters"] = e.parameters;
    item["description"] = e.description;
    j.push_back(item);
    os << std::left << std::setw(26) << e.name << std::setw(8) << item["kind"].get<std::string>()
       << e.description << "\n";
  }
  emit(opt, j, os.str());
  return kOk;
}

int report_violations(const Options& opt, const std::string& what,
                      const fusion::VerificationReport& report,
                      const std::map<fusion::Triple, std::string>& locations,
                      const std::function<std::string(const fusion::Violation&)>& where) {
  OJson j;
  j["object"] = what;
  j["valid"] = report.ok();
  j["violations"] = OJson::array();
  std::ostringstream os;
  os << what << ": " << (report.ok() ? "valid" : "INVALID") << "\n";
  for (const auto& v : report.violations) {
    OJson item;
    item["axiom"] = std::string(fusion::axiom_name(v.axiom));
    item["witness"] = v.witness;
    item["detail"] = v.detail;
    const std::string loc = where(v);
    if (!loc.empty()) item["location"] = loc;
    j["violations"].push_back(item);
    os << "  " << fusion::axiom_name(v.axiom) << ": " << v.detail
       << (loc.empty() ? "" : " [" + loc + "]") << "\n";
  }
  (void)locations;
  emit(opt, j, os.str());
  return report.ok() ? kOk : kAxiom;
}

bool looks_like_module(const std::string& src) {
  if (!is_file(src)) return src.rfind("near-group-bimodule:", 0) == 0 || src.rfind("regular:", 0) == 0;
  try {
    const auto j = fusion::Json::parse(read_file(src));
    return j.is_object() && j.contains("over");
  } catch (const fusion::Json::exception&) {
    return false;
  }
}

int cmd_verify(const Options& opt, const std::string& src, bool module) {
  module = module || looks_like_module(src);
  if (module) {
    fusion::ModuleDocument doc = [&] {
      if (is_file(src)) return fusion::read_module_document(read_file(src), resolver_for(src));
      try {
        return fusion::ModuleDocument{fusion::catalog_module(src), {}, {}};
      } catch (const fusion::NotFoundError&) {
        throw UsageError("'" + src + "' is neither a file nor a catalog module");
      }
    }();
    const auto report = fusion::verify_bimodule(doc.module);
    return report_violations(opt, src, report, doc.left_locations, [&](const fusion::Violation& v) {
      if (v.witness.size() != 3) return std::string();
      const fusion::Triple t{v.witness[0], v.witness[1], v.witness[2]};
      const auto& loc = v.detail.rfind("right", 0) == 0 ? doc.right_locations : doc.left_locations;
      auto it = loc.find(t);
      return it == loc.end() ? std::string() : it->second;
    });
  }
  const fusion::RingDocument doc = load_ring_unverified(src);
  const auto report = fusion::verify_ring(doc.ring);
  return report_violations(opt, src, report, doc.locations, [&](const fusion::Violation& v) {
    if (v.witness.size() != 3) return std::string();
    auto it = doc.locations.find({v.witness[0], v.witness[1], v.witness[2]});
    return it == doc.locations.end() ? std::string() : it->second;
  });
}

int cmd_analyze(const Options& opt, const std::string& src) {
  const auto ring = load_ring(src);
  const auto fp = fusion::fp_dimensions(*ring, {opt.tolerance, 1'000'000});
  const auto inv = fusion::invertibles(*ring);
  const auto adj = fusion::adjoint_support(*ring);
  const auto grading = fusion::universal_grading(*ring);
  const auto chars = fusion::character_group(*ring);
  const auto gen = fusion::two_supertransitive_generator(*ring);

  OJson j;
  j["ring"] = src;
  j["rank"] = ring->rank();
  j["labels"] = ring->labels();
  OJson dims;
  std::ostringstream os;
  os << "ring: " << src << " (rank " << ring->rank() << ")\n";
  os << "fp dimensions:\n";
  for (Index i = 0; i < ring->rank(); ++i) {
    dims[ring->label(i)] = fixed(fp[i]);
    os << "  " << std::left << std::setw(10) << ring->label(i) << fixed(fp[i]) << "\n";
  }
  j["fp_dimensions"] = dims;
  j["global_dimension"] = fixed(fp.global_dimension());
  os << "global dimension: " << fixed(fp.global_dimension()) << "\n";
  j["invertibles"] = labels_json(*ring, inv.elements);
  os << "invertibles (order " << inv.order() << "): " << labels_of(*ring, inv.elements) << "\n";
  j["adjoint_support"] = labels_json(*ring, adj);
  os << "adjoint support: " << labels_of(*ring, adj) << "\n";
  OJson classes = OJson::array();
  os << "universal grading group: order " << grading.order() << "\n";
  for (std::size_t c = 0; c < grading.order(); ++c) {
    classes.push_back(labels_json(*ring, grading.classes[c]));
    os << "  class " << c << ": " << labels_of(*ring, grading.classes[c]) << "\n";
  }
  j["grading_classes"] = classes;
  j["grading_table"] = grading.table;
  j["characters"] = group_json(chars);
  os << "Hom(U(C), C^x): " << chars.to_string() << "\n";
  j["two_supertransitive_generator"] = gen ? OJson(ring->label(*gen)) : OJson(nullptr);
  os << "2-supertransitive generator: " << (gen ? ring->label(*gen) : "none") << "\n";
  emit(opt, j, os.str());
  return kOk;
}

OJson bound_json(const fusion::FusionRing& ring, const fusion::CenterBound& b) {
  OJson j;
  j["kernel_part"] = group_json(b.kernel_part);
  j["cokernel_bound"] = labels_json(ring, b.cokernel_bound);
  j["order_bound"] = b.order_bound.str();
  j["exact_order"] = b.exact_order ? OJson(b.exact_order->str()) : OJson(nullptr);
  return j;
}

int cmd_bound(const Options& opt, const std::string& src) {
  const auto ring = load_ring(src);
  const auto b = fusion::center_bound(*ring);
  OJson j;
  j["ring"] = src;
  j.update(bound_json(*ring, b));
  std::ostringstream os;
  os << "ring: " << src << "\n"
     << "Hom(U(C), C^x): " << b.kernel_part.to_string() << "\n"
     << "invertibles fixing every basis element under conjugation: "
     << labels_of(*ring, b.cokernel_bound) << " (order " << b.cokernel_bound.size() << ")\n"
     << "|Inv Z(C)| divides: " << b.order_bound.str() << "\n"
     << "exact |Inv Z(C)|: " << (b.exact_order ? b.exact_order->str() : "unknown") << "\n";
  emit(opt, j, os.str());
  return kOk;
}

OJson report_json(const fusion::FusionRing& ring, const fusion::ObstructionReport& r) {
  OJson j;
  j["group_order"] = r.group_order;
  j["assumptions"] = assumptions_json(r.assumptions);
  j["center_bound"] = bound_json(ring, r.center);
  j["o3_status"] = std::string(fusion::status_name(r.o3_status));
  j["o4_status"] = std::string(fusion::status_name(r.o4_status));
  OJson primes = OJson::array();
  for (const auto& p : r.offending_primes) primes.push_back(p.str());
  j["offending_primes"] = primes;
  j["extension_count"] = r.extension_count ? OJson(r.extension_count->str()) : OJson(nullptr);
  j["narrative"] = r.narrative;
  return j;
}

int cmd_obstruct(const Options& opt, const std::string& src, std::size_t m,
                 const fusion::Assumptions& a) {
  const auto ring = load_ring(src);
  const auto rep = fusion::obstruction_report(*ring, m, a);
  OJson j = report_json(*ring, rep);
  j["ring"] = src;
  std::ostringstream os;
  os << "ring: " << src << "\n"
     << "grading group: Z/" << m << "\n"
     << "assumptions: " << assumptions_text(a) << "\n"
     << "o3: " << fusion::status_name(rep.o3_status) << "\n"
     << "o4: " << fusion::status_name(rep.o4_status) << "\n"
     << "extension count: " << (rep.extension_count ? rep.extension_count->str() : "undetermined")
     << "\n"
     << "justification:\n";
  for (const auto& line : rep.narrative) os << "  - " << line << "\n";
  emit(opt, j, os.str());
  return kOk;
}

std::string products_text(const fusion::GradedFusionRing& g) {
  std::ostringstream os;
  const auto& full = g.full;
  for (Index m = g.even_rank(); m < full.rank(); ++m)
    for (Index q = m; q < full.rank(); ++q)
      os << "    " << full.label(m) << " * " << full.label(q) << " = "
         << fusion::format_multiset(full, fusion::multiply(full, m, q)) << "\n";
  return os.str();
}

std::string sigma_text(const fusion::FusionBimodule& mod, const std::vector<Index>& sigma) {
  std::string out;
  for (Index m = 0; m < sigma.size(); ++m)
    out += (m ? " " : "") + mod.label(m) + "->" + mod.label(sigma[m]);
  return out;
}

int cmd_extend(const Options& opt, const std::string& src, const fusion::Assumptions& a,
               const std::string& save_dir, const std::string& generator, bool dot) {
  const fusion::FusionBimodule mod = load_module(src);
  if (!mod.single_ring()) throw UsageError("extend needs a bimodule over a single ring");
  const fusion::FusionRing& even = mod.left_ring();
  if (const auto rep = fusion::verify_ring(even); !rep.ok())
    throw fusion::AxiomError("even ring fails verification");
  if (const auto rep = fusion::verify_bimodule(mod); !rep.ok())
    throw fusion::AxiomError("bimodule fails verification");
  fusion::SearchOptions so;
  so.jobs = opt.jobs;
  so.fp.tolerance = opt.tolerance;
  const auto search = fusion::search_extensions(even, mod, so);
  const auto obstruction = fusion::obstruction_report(even, 2, a);

  OJson j;
  j["module"] = src;
  j["assumptions"] = assumptions_json(a);
  j["o3_status"] = std::string(fusion::status_name(obstruction.o3_status));
  j["o4_status"] = std::string(fusion::status_name(obstruction.o4_status));
  j["extensions_per_ring"] =
      obstruction.extension_count ? OJson(obstruction.extension_count->str()) : OJson(nullptr);
  j["candidates"] = OJson::array();
  std::ostringstream os;
  os << "bimodule: " << src << " (rank " << mod.rank() << ") over ring of rank " << even.rank()
     << "\n"
     << "assumptions: " << assumptions_text(a) << "\n"
     << "involution candidates: " << search.candidates.size() << "\n";
  for (std::size_t c = 0; c < search.candidates.size(); ++c) {
    const auto& out = search.outcomes[c];
    OJson item;
    OJson sig;
    for (Index m = 0; m < mod.rank(); ++m) sig[mod.label(m)] = mod.label(search.candidates[c][m]);
    item["sigma"] = sig;
    item["accepted"] = out.ok();
    if (out.ok()) item["ring"] = *search.ring_of_candidate[c];
    OJson vio = OJson::array();
    for (const auto& v : out.report.violations) {
      if (vio.size() == 5) break;
      vio.push_back(std::string(fusion::axiom_name(v.axiom)) + ": " + v.detail);
    }
    item["violations"] = vio;
    item["violation_count"] = out.report.violations.size();
    j["candidates"].push_back(item);
    os << "  [" << c << "] " << sigma_text(mod, search.candidates[c]) << ": ";
    if (out.ok())
      os << "accepted (ring " << *search.ring_of_candidate[c] << ")\n";
    else
      os << "rejected, " << out.report.violations.size() << " violation(s), first: "
         << fusion::axiom_name(out.report.violations.front().axiom) << ": "
         << out.report.violations.front().detail << "\n";
  }
  os << "distinct graded fusion rings (even part fixed pointwise): " << search.rings.size() << "\n";
  os << "extensions per ring from obstruction theory: "
     << (obstruction.extension_count ? obstruction.extension_count->str() : "undetermined")
     << " (o3 " << fusion::status_name(obstruction.o3_status) << ", o4 "
     << fusion::status_name(obstruction.o4_status) << ")\n";

  j["rings"] = OJson::array();
  std::string dots;
  for (std::size_t k = 0; k < search.rings.size(); ++k) {
    const auto& g = search.rings[k];
    OJson item;
    OJson odd;
    os << "ring " << k << ":\n  odd dimensions:\n";
    for (Index i = g.even_rank(); i < g.full.rank(); ++i) {
      OJson o;
      o["dimension"] = fixed(g.dims[i]);
      o["dual"] = g.full.label(g.full.dual(i));
      odd[g.full.label(i)] = o;
      os << "    " << std::left << std::setw(8) << g.full.label(i) << fixed(g.dims[i])
         << "  dual " << g.full.label(g.full.dual(i)) << "\n";
    }
    item["odd"] = odd;
    item["document"] = OJson::parse(fusion::serialize_ring(g.full));
    os << "  odd products:\n" << products_text(g);
    if (!generator.empty()) {
      const Index gen = g.full.index_of(generator);
      const auto graph = fusion::fusion_graph(g, gen);
      const auto spokes = fusion::spoke_profile(graph);
      const std::size_t st = fusion::supertransitivity(graph);
      item["supertransitivity"] = st;
      item["spokes"] = spokes.shape == fusion::SpokeShape::spoke ? OJson(spokes.lengths)
                                                                 : OJson(nullptr);
      os << "  fusion graph of " << generator << ": supertransitivity " << st << ", spokes ";
      if (spokes.shape == fusion::SpokeShape::spoke) {
        for (std::size_t i = 0; i < spokes.lengths.size(); ++i)
          os << (i ? "," : "") << spokes.lengths[i];
      } else {
        os << (spokes.shape == fusion::SpokeShape::path ? "none (path)" : "none");
      }
      os << "\n";
      if (dot) dots += fusion::emit_dot(graph);
    }
    if (!save_dir.empty()) {
      fs::create_directories(save_dir);
      const fs::path file = fs::path(save_dir) / ("extension-" + std::to_string(k) + ".json");
      std::ofstream(file, std::ios::binary) << fusion::serialize_ring(g.full);
      os << "  saved " << file.string() << "\n";
    }
    j["rings"].push_back(item);
  }
  if (dot) {
    std::cout << dots;
    return kOk;
  }
  emit(opt, j, os.str());
  return kOk;
}

int cmd_graph(const Options& opt, const std::string& src, const std::string& generator,
              bool dot) {
  const auto ring = load_ring(src);
  const auto graph = fusion::fusion_graph(*ring, ring->index_of(generator));
  if (dot) {
    std::cout << fusion::emit_dot(graph);
    return kOk;
  }
  OJson j;
  j["ring"] = src;
  j["generator"] = generator;
  j["self_dual"] = graph.self_dual;
  const bool conn = fusion::connected(graph);
  j["connected"] = conn;
  OJson edges = OJson::array();
  std::ostringstream os;
  os << "fusion graph of " << generator << " in " << src << "\n"
     << "generator self-dual: " << (graph.self_dual ? "yes" : "no") << "\n"
     << "edges:\n";
  for (Index a = 0; a < graph.size(); ++a)
    for (Index b = graph.self_dual ? a : 0; b < graph.size(); ++b)
      if (graph.adjacency[a][b] != 0) {
        edges.push_back({ring->label(a), ring->label(b), graph.adjacency[a][b].str()});
        os << "  " << ring->label(a) << (graph.self_dual ? " -- " : " -> ") << ring->label(b);
        if (graph.adjacency[a][b] != 1) os << " x" << graph.adjacency[a][b].str();
        os << "\n";
      }
  j["edges"] = edges;
  if (conn) {
    const std::size_t st = fusion::supertransitivity(graph);
    const auto spokes = fusion::spoke_profile(graph);
    j["supertransitivity"] = st;
    j["spokes"] =
        spokes.shape == fusion::SpokeShape::spoke ? OJson(spokes.lengths) : OJson(nullptr);
    j["shape"] = spokes.shape == fusion::SpokeShape::spoke  ? "spoke"
                 : spokes.shape == fusion::SpokeShape::path ? "path"
                                                            : "other";
    os << "supertransitivity: " << st << "\n" << "shape: " << j["shape"].get<std::string>();
    if (spokes.shape == fusion::SpokeShape::spoke) {
      os << " (hub " << ring->label(*spokes.hub) << ", spokes ";
      for (std::size_t i = 0; i < spokes.lengths.size(); ++i)
        os << (i ? "," : "") << spokes.lengths[i];
      os << ")";
    }
    os << "\n";
  } else {
    os << "graph is disconnected\n";
  }
  emit(opt, j, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion ring invariants, extension obstructions and Z/2 extension search"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", opt.jobs, "Worker threads for the extension search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol", opt.tolerance, "Perron iteration tolerance")->capture_default_str();

  std::string source, generator, save_dir;
  std::size_t group_order = 2;
  bool module = false, dot = false;
  fusion::Assumptions assumptions;
  std::string exact_center;

  std::string show;
  auto* catalog = app.add_subcommand("catalog", "List built-in rings and modules");
  catalog->add_option("--show", show, "Print the document of one catalog instance");

  auto* verify = app.add_subcommand("verify", "Check the fusion ring (or module) axioms");
  verify->add_option("source", source, "Catalog key or JSON document")->required();
  verify->add_flag("--module", module,
                   "Treat the source as a bimodule (implied by an \"over\" field)");

  auto* analyze = app.add_subcommand(
      "analyze", "FP dimensions, invertibles, universal grading and characters");
  analyze->add_option("source", source, "Catalog key or JSON document")->required();

  auto* bound = app.add_subcommand("bound", "Ring-level bound on Inv(Z(C))");
  bound->add_option("source", source, "Catalog key or JSON document")->required();

  auto add_assumptions = [&](CLI::App* sub) {
    sub->add_flag("--assume-self-dual", assumptions.self_dual,
                  "The category is self-dual (not decidable from the ring)");
    sub->add_flag("--assume-trivial-out", assumptions.trivial_out,
                  "The outer automorphism group is trivial (not decidable from the ring)");
    sub->add_option("--exact-center-order", exact_center, "Known order of Inv(Z(C))");
  };

  auto* obstruct = app.add_subcommand("obstruct", "Certify o3/o4 for Z/m-graded extensions");
  obstruct->add_option("source", source, "Catalog key or JSON document")->required();
  obstruct->add_option("--group-order", group_order, "m for G = Z/m")
      ->required()
      ->check(CLI::PositiveNumber);
  add_assumptions(obstruct);

  auto* extend = app.add_subcommand("extend", "Search Z/2-graded extension rings of a bimodule");
  extend->add_option("source", source, "Catalog key or JSON bimodule document")->required();
  extend->add_option("--save", save_dir, "Write each ring found to DIR/extension-K.json");
  extend->add_option("--generator", generator, "Report the fusion graph of this label");
  extend->add_flag("--dot", dot, "Print DOT graphs of --generator instead of the report");
  add_assumptions(extend);

  auto* graph = app.add_subcommand("graph", "Fusion graph of a generator");
  graph->add_option("source", source, "Catalog key or JSON document")->required();
  graph->add_option("--generator", generator, "Basis label of the generator")->required();
  graph->add_flag("--dot", dot, "Print the graph in DOT format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (!exact_center.empty()) {
      if (exact_center.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("--exact-center-order must be a positive integer");
      assumptions.exact_center_order = Integer(exact_center);
    }
    if (*catalog) return cmd_catalog(opt, show);
    if (*verify) return cmd_verify(opt, source, module);
    if (*analyze) return cmd_analyze(opt, source);
    if (*bound) return cmd_bound(opt, source);
    if (*obstruct) return cmd_obstruct(opt, source, group_order, assumptions);
    if (*extend) {
      if (dot && generator.empty()) throw UsageError("--dot needs --generator");
      return cmd_extend(opt, source, assumptions, save_dir, generator, dot);
    }
    if (*graph) return cmd_graph(opt, source, generator, dot);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const fusion::NotFoundError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const fusion::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const fusion::StructureError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const fusion::AxiomError& e) {
    std::cerr << "axiom violation: " << e.what() << "\n";
    return kAxiom;
  } catch (const fusion::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
