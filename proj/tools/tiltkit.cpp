// tiltkit command-line entry point. Every verb reads one JSON document (file argument or standard
// input) and writes one JSON document (standard output or --out).

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "harness/suites.hpp"
#include "tiltkit/errors.hpp"
#include "tiltkit/zmod/reduction.hpp"

namespace {

using namespace tiltkit;
using io::json;

using Handler = std::function<json(const json&)>;

// Exit status for a run that completed but did not verify.
constexpr int kFailed = 1;
constexpr int kUsage = 2;

json canon(const FgGroup& g) { return g.canonical().str(); }

// [a, b] or {"src": a, "dst": b}
std::pair<json, json> pair_of(const json& j) {
  if (j.is_array() && j.size() == 2) return {j[0], j[1]};
  if (j.is_object() && j.contains("src") && j.contains("dst")) return {j.at("src"), j.at("dst")};
  fail(ErrorKind::InvalidInput, "expected a pair [a, b]");
}

json b_object_summary(const BObject& x) {
  json j = io::to_json(x);
  j["is_zero"] = x.is_zero();
  return j;
}

json subgroup_json(const Subgroup& s) {
  return {{"group", canon(s.group())}, {"generators", io::to_json(s.generators())}};
}

json chain_cohomology(const ChainComplex& c) {
  json out = json::array();
  for (int n = c.lo(); n <= c.hi(); ++n)
    out.push_back({{"degree", n}, {"term", canon(c.term(n))}, {"cohomology", canon(c.cohomology(n).group)}});
  return out;
}

// ---------------------------------------------------------------------------------------------
// zmod

json zmod_snf(const json& j) {
  IntMatrix m = io::parse_matrix(j.is_object() ? j.at("matrix") : j);
  SmithForm s = smith(m);
  return {{"diag", io::to_json(s.diag)},
          {"rank", s.rank},
          {"D", io::to_json(s.D(m.rows(), m.cols()))},
          {"U", io::to_json(s.U)},
          {"V", io::to_json(s.V)}};
}

json zmod_canonical(const json& j) {
  CanonicalForm c = io::parse_group(j).canonical();
  return {{"canonical", c.str()}, {"free_rank", c.free_rank}, {"torsion", io::to_json(c.torsion)}};
}

json zmod_hom(const json& j) {
  auto [a, b] = pair_of(j);
  HomGroup h(io::parse_group(a), io::parse_group(b));
  json gens = json::array();
  for (const auto& g : h.generators()) gens.push_back(io::to_json(g.lift()));
  return {{"group", canon(h.group())}, {"generators", gens}, {"orders", io::to_json(h.orders())}};
}

json zmod_kernel(const json& j) { return subgroup_json(kernel(io::parse_map(j))); }

json zmod_cokernel(const json& j) {
  Quotient q = cokernel(io::parse_map(j));
  return {{"group", canon(q.group)}, {"quotient", io::to_json(q.group)}, {"projection", io::to_json(q.proj.lift())}};
}

// ---------------------------------------------------------------------------------------------
// b

json b_validate(const json& j) {
  json out = b_object_summary(io::parse_b_object(j));
  out["valid"] = true;
  return out;
}

json b_compose(const json& j) {
  auto [p, q] = pair_of(j);
  return io::to_json(compose(io::parse_butterfly(p), io::parse_butterfly(q)));
}

json b_add(const json& j) {
  auto [p, q] = pair_of(j);
  return io::to_json(add(io::parse_butterfly(p), io::parse_butterfly(q)));
}

json b_kernel(const json& j) {
  BKernel k = kernel_b(io::parse_butterfly(j));
  return {{"object", b_object_summary(k.object)}, {"inclusion", io::to_json(k.inclusion)}};
}

json b_cokernel(const json& j) {
  BCokernel c = cokernel_b(io::parse_butterfly(j));
  return {{"object", b_object_summary(c.object)}, {"projection", io::to_json(c.projection)}};
}

json b_classify(const json& j) {
  Classification c = classify_morphism(io::parse_butterfly(j));
  json out = {{"is_mono", c.is_mono}, {"is_epi", c.is_epi}, {"is_iso", c.is_iso}};
  if (c.inverse) out["inverse"] = io::to_json(*c.inverse);
  return out;
}

json b_les(const json& j) {
  LongExactSequence les = long_exact_sequence(io::parse_butterfly(j));
  json groups = json::array(), maps = json::array();
  std::string seq;
  for (const auto& g : les.groups) {
    groups.push_back(canon(g));
    seq += g.canonical().str() + "→";
  }
  for (const auto& f : les.maps) maps.push_back(io::to_json(f));
  json out = {{"groups", groups}, {"maps", maps}, {"exact", les.exact}, {"sequence", seq + "0"}};
  if (!les.exact) out["first_failure"] = les.first_failure;
  return out;
}

json b_cohomology(const json& j) {
  BCohomology h = b_complex_cohomology(io::parse_b_complex(j));
  json out = json::array();
  for (int n = h.lo; n <= h.hi(); ++n) out.push_back({{"degree", n}, {"object", b_object_summary(h.at(n))}});
  return out;
}

// ---------------------------------------------------------------------------------------------
// dec

json dec_cohomology_cmd(const json& j) {
  DecCohomology h = dec_cohomology(io::parse_dec_complex(j));
  json degrees = json::array();
  for (int n = h.lo; n <= h.hi(); ++n)
    degrees.push_back({{"degree", n}, {"h_m1", canon(h.m1(n).group())}, {"h_0", canon(h.zero(n).group)}});
  return {{"degrees", degrees}, {"compatible", is_compatible(h)}};
}

json dec_compatible(const json& j) { return {{"compatible", is_compatible(io::parse_dec_complex(j))}}; }

json dec_cone(const json& j) { return io::to_json(cone(io::parse_dec_map(j))); }

json dec_hh(const json& j) {
  HhFunctor h = hh_functor(io::parse_chain_complex(j));
  json out = json::array();
  for (int n = h.lo; n <= h.hi(); ++n) out.push_back({{"degree", n}, {"object", b_object_summary(h.hh(n))}});
  return out;
}

json dec_freecover(const json& j) {
  FreeCover c = free_cover_complex(io::parse_dec_complex(j));
  return {{"cover", io::to_json(c.cover)}, {"map", io::to_json(c.map)}};
}

// ---------------------------------------------------------------------------------------------
// bridge

bool is_map(const json& j) { return j.is_object() && j.contains("components"); }

json tot_cmd(const json& j) {
  if (is_map(j)) return io::to_json(tot_map(io::parse_b_chain_map(j)));
  return io::to_json(tot(io::parse_b_complex(j)));
}

json g_cmd(const json& j) {
  if (is_map(j)) return io::to_json(g_map(io::parse_dec_map(j)));
  return io::to_json(g_inverse(io::parse_dec_complex(j)));
}

json link_cmd(const json& j) {
  auto [p, q] = pair_of(j);
  std::optional<GroupMap> l = link(io::parse_butterfly(p), io::parse_butterfly(q));
  json out = {{"exists", l.has_value()}};
  if (l) out["link"] = io::to_json(*l);
  return out;
}

json roof_cmd(const json& j) {
  Roof r = roof(io::parse_butterfly(j));
  return {{"e", b_object_summary(r.e)}, {"s", io::to_json(r.s)}, {"g", io::to_json(r.g)}};
}

// ---------------------------------------------------------------------------------------------
// c

json c_validate(const json& j) {
  CObject c = io::parse_c_object(j);
  json out = io::to_json(c);
  out["valid"] = true;
  out["h"] = canon(h_functor(c));
  return out;
}

json c_h(const json& j) {
  FgGroup h = h_functor(io::parse_c_object(j));
  return {{"group", io::to_json(h)}, {"canonical", canon(h)}};
}

json c_qprime(const json& j) {
  QPrime q = qprime(io::parse_group(j));
  return {{"object", io::to_json(q.object)},
          {"cover", io::to_json(q.cover)},
          {"witness", io::to_json(q.witness)},
          {"h", canon(h_functor(q.object))}};
}

// ---------------------------------------------------------------------------------------------
// dg

json dg_hom(const json& j) {
  auto [a, b] = pair_of(j);
  DecoratedHomComplex h = hom_complex_dec(io::parse_dec_complex(a), io::parse_dec_complex(b));
  const bool enriched = enrich_check(h);
  json degrees = json::array();
  for (int k = h.lo; k <= h.hi(); ++k)
    degrees.push_back({{"degree", k}, {"hom", canon(h.complex.complex().term(k))}, {"m", canon(h.complex.deco(k).group())}});
  json out = {{"degrees", degrees}, {"enriched", enriched}};
  if (enriched) {
    DgQuotient q = dg_quotient(h);
    out["quotient"] = chain_cohomology(q.complex);
  }
  return out;
}

json dg_strict_hom(const json& j) {
  auto [a, b] = pair_of(j);
  StrictHomComplex s = strict_hom_complex(io::parse_b_complex(a), io::parse_b_complex(b));
  return {{"degrees", chain_cohomology(s.complex)}};
}

json dg_rhom(const json& j) {
  auto [a, b] = pair_of(j);
  RHom r = rhom(io::parse_b_complex(a), io::parse_b_complex(b));
  return {{"resolution", io::to_json(r.resolution.complex)}, {"degrees", chain_cohomology(r.complex.complex)}};
}

json dg_check_enrich(const json& j) {
  auto [a, b] = pair_of(j);
  return {{"enriched", enrich_check(hom_complex_dec(io::parse_dec_complex(a), io::parse_dec_complex(b)))}};
}

json dg_semi_projective(const json& j) {
  SemiProjective p = semi_projective_replace(io::parse_b_object(j));
  return {{"object", b_object_summary(p.object)}, {"iso", io::to_json(p.iso)}};
}

json dg_hom_b(const json& j) {
  auto [a, b] = pair_of(j);
  BHom h = hom_group_b(io::parse_b_object(a), io::parse_b_object(b));
  return {{"group", canon(h.group())}};
}

// ---------------------------------------------------------------------------------------------

json read_input(const std::string& path) {
  std::stringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

void write_output(const json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

void report_error(const std::string& kind, const std::string& detail, bool as_json) {
  if (as_json)
    std::cerr << json{{"error", kind}, {"detail", detail}}.dump() << "\n";
  else
    std::cerr << "tiltkit: " << kind << ": " << detail << "\n";
}

harness::GeneratorConfig parse_bounds(harness::GeneratorConfig cfg, const std::string& bounds) {
  std::vector<long long> v;
  std::stringstream ss(bounds);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      v.push_back(std::stoll(part));
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidInput, "--bounds expects rank,rels,entry,len");
    }
  }
  if (v.size() != 4) fail(ErrorKind::InvalidInput, "--bounds expects rank,rels,entry,len");
  for (long long x : v)
    if (x <= 0) fail(ErrorKind::InvalidInput, "--bounds entries must be positive");
  cfg.max_ambient_rank = static_cast<size_t>(v[0]);
  cfg.max_relations = static_cast<size_t>(v[1]);
  cfg.entry_bound = v[2];
  cfg.max_complex_length = static_cast<size_t>(v[3]);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact HRS-tilting over finitely generated abelian groups", "tiltkit"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_errors = false;
  std::string out_path, bounds, suite = "all", kind;
  uint64_t seed = 42;
  size_t trials = 0, count = 10;
  app.add_flag("--json-errors", json_errors, "Report errors as a JSON object on standard error");
  app.add_option("--out", out_path, "Write the result to a file instead of standard output");
  app.add_option("--seed", seed, "Master seed for generators and suites")->envname("TILTKIT_SEED");
  app.add_option("--trials", trials, "Trials per suite (default 200)");
  app.add_option("--bounds", bounds, "Generator bounds rank,rels,entry,len (default 3,4,9,4)");

  std::string input;
  Handler chosen;
  auto verb = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("input", input, "JSON input file (standard input if omitted)");
    sub->callback([&chosen, h] { chosen = h; });
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };

  CLI::App* zmod = group("zmod", "Finitely generated abelian groups");
  verb(zmod, "snf", "Smith normal form of an integer matrix", zmod_snf);
  verb(zmod, "canonical", "Invariant-factor form of a group", zmod_canonical);
  verb(zmod, "hom", "Hom(A, B) for a pair [A, B]", zmod_hom);
  verb(zmod, "kernel", "Kernel of a homomorphism", zmod_kernel);
  verb(zmod, "cokernel", "Cokernel of a homomorphism", zmod_cokernel);

  CLI::App* b = group("b", "The heart B of two-term complexes and butterflies");
  verb(b, "validate", "Check a two-term complex lies in B", b_validate);
  verb(b, "compose", "q∘p for a pair [p, q]", b_compose);
  verb(b, "add", "Sum of a pair of parallel butterflies", b_add);
  verb(b, "kernel", "Kernel in B", b_kernel);
  verb(b, "cokernel", "Cokernel in B", b_cokernel);
  verb(b, "classify", "Mono, epi and iso tests with the inverse", b_classify);
  verb(b, "les", "Seven-term long exact sequence of H-groups", b_les);
  verb(b, "cohomology", "Cohomology objects of a B-complex", b_cohomology);

  CLI::App* dec = group("dec", "Decorated complexes");
  verb(dec, "cohomology", "H^{-1,n} and H^{0,n}", dec_cohomology_cmd);
  verb(dec, "compatible", "Compatibility of the decoration", dec_compatible);
  verb(dec, "cone", "Mapping cone of a decorated map", dec_cone);
  verb(dec, "hh", "ℍ^n of a chain complex as objects of B", dec_hh);
  verb(dec, "freecover", "Free cover quasi-isomorphism", dec_freecover);

  verb(&app, "tot", "Total decorated complex of a B-complex or B-chain map", tot_cmd);
  verb(&app, "g", "B-complex of a decorated complex or map", g_cmd);
  verb(&app, "link", "Link of a composable pair [p, q] with zero composite", link_cmd);
  verb(&app, "roof", "Roof g∘s^{-1} of a butterfly", roof_cmd);

  CLI::App* c = group("c", "The second tilted heart");
  verb(c, "validate", "Check a 4-tuple", c_validate);
  verb(c, "h", "The functor H", c_h);
  verb(c, "qprime", "Q′ of a group with its witness", c_qprime);

  CLI::App* dg = group("dg", "Hom complexes");
  verb(dg, "hom", "Decorated hom complex of a pair of decorated complexes", dg_hom);
  verb(dg, "strict-hom", "Strict hom complex of a pair of B-complexes", dg_strict_hom);
  verb(dg, "rhom", "Derived hom through a semi-projective resolution", dg_rhom);
  verb(dg, "check-enrich", "Vanishing of 𝓜 ∩ d^{-1}𝓜", dg_check_enrich);
  verb(dg, "semi-projective", "Semi-projective replacement of a B-object", dg_semi_projective);
  verb(dg, "hom-b", "Hom_B of a pair of B-objects", dg_hom_b);

  bool verify_run = false, gen_run = false;
  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "Suite name or all");
  verify->callback([&] { verify_run = true; });
  CLI::App* gen = app.add_subcommand("gen", "Emit random instances");
  gen->add_option("--kind", kind, "Instance kind")->required();
  gen->add_option("--count", count, "Number of instances");
  gen->callback([&] { gen_run = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    harness::GeneratorConfig cfg;
    cfg.seed = seed;
    if (trials) cfg.trials = trials;
    if (!bounds.empty()) cfg = parse_bounds(cfg, bounds);
    cfg.validate();

    if (verify_run) {
      std::vector<std::string> names = suite == "all" ? harness::suite_names() : std::vector<std::string>{suite};
      json reports = json::array();
      bool passed = true;
      for (const auto& name : names) {
        harness::VerificationReport r = harness::run_suite(name, cfg);
        passed = passed && r.passed();
        reports.push_back(harness::to_json(r));
      }
      write_output({{"seed", cfg.seed}, {"passed", passed}, {"suites", reports}}, out_path);
      return passed ? 0 : kFailed;
    }
    if (gen_run) {
      write_output(harness::generate(kind, cfg, count), out_path);
      return 0;
    }
    write_output(chosen(read_input(input)), out_path);
    return 0;
  } catch (const TiltError& e) {
    report_error(error_name(e.kind()), e.detail(), json_errors);
    return e.kind() == ErrorKind::UnknownSuite || e.kind() == ErrorKind::UnknownKind ? kUsage : kFailed;
  } catch (const json::exception& e) {
    report_error(error_name(ErrorKind::InvalidInput), e.what(), json_errors);
    return kFailed;
  }
}
