// Acceptance criteria at the default scale, seed 42. One PASS/FAIL line per criterion; the exit
// status is nonzero if any criterion fails. The worked examples are replayed through the CLI.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "harness/suites.hpp"

#ifndef TILTKIT_CLI_PATH
#error "TILTKIT_CLI_PATH must name the tiltkit executable"
#endif

namespace {

using namespace tiltkit;
using io::json;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

void run(Outcome& o, const std::string& suite, size_t trials, size_t max_len = 4) {
  harness::GeneratorConfig cfg;
  cfg.seed = 42;
  cfg.trials = trials;
  cfg.max_complex_length = max_len;
  harness::VerificationReport r = harness::run_suite(suite, cfg);
  o.require(r.trials == trials || suite == "worked-examples", suite + ": ran " + std::to_string(r.trials) + " trials");
  for (const auto& f : r.failures) o.require(false, suite + " trial " + std::to_string(f.trial) + ": " + f.clause);
}

// ---------------------------------------------------------------------------------------------
// CLI replay

json cli(const std::string& verb, const json& input) {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string in = dir / "tiltkit_acceptance_input.json", out = dir / "tiltkit_acceptance_output.json";
  std::ofstream(in) << input.dump();
  const std::string cmd = std::string("\"") + TILTKIT_CLI_PATH + "\" " + verb + " " + in + " --out " + out;
  if (std::system(cmd.c_str()) != 0) return json();
  std::ifstream f(out);
  json result = json::parse(f, nullptr, false);
  std::filesystem::remove(in);
  std::filesystem::remove(out);
  return result;
}

json group(int rank, std::vector<std::vector<std::string>> rel = {}) {
  json j = {{"ambient_rank", rank}};
  if (!rel.empty()) j["relations"] = rel;
  return j;
}
json Z() { return group(1); }
json cyclic(int n) { return group(1, {{std::to_string(n)}}); }
json times(int k, json src = Z(), json dst = Z()) { return {{"src", src}, {"dst", dst}, {"lift", {{std::to_string(k)}}}}; }

json f24() {
  return {{"src", {{"d", times(2)}}},
          {"dst", {{"d", times(4)}}},
          {"e", Z()},
          {"kappa", times(1)},
          {"iota", times(1)},
          {"sigma", times(1)},
          {"rho", times(1)},
          {"strict", {{"m1", {{"1"}}}, {"zero", {{"2"}}}}}};
}

void worked_examples_cli(Outcome& o) {
  json snf = cli("zmod snf", json::array({{"2", "4"}, {"6", "8"}}));
  o.require(snf.is_object() && snf["diag"] == json({"2", "4"}), "SNF of [[2,4],[6,8]] is diag(2,4)");

  json ck = cli("b cokernel", f24());
  o.require(ck.is_object() && ck["object"]["d"]["lift"] == json({{"2"}}) &&
                ck["object"]["d"]["src"]["canonical"] == "Z" && ck["object"]["d"]["dst"]["canonical"] == "Z" &&
                ck["object"]["h_m1"] == "0" && ck["object"]["h_0"] == "Z/2",
            "cokernel of f24 is [Z →×2 Z]");

  json hom = cli("zmod hom", json::array({cyclic(4), cyclic(6)}));
  o.require(hom.is_object() && hom["group"] == "Z/2", "Hom(Z/4, Z/6) = Z/2");

  json d1 = {{"support", {0, 1}},
             {"terms", {Z(), Z()}},
             {"differentials", {times(2)}},
             {"decoration", {{{"1"}}, {json::array()}}}};
  json dc = cli("dec cohomology", d1);
  json expect = json::array();
  for (int n = -1; n <= 1; ++n) expect.push_back({{"degree", n}, {"h_m1", "0"}, {"h_0", n == 0 ? "Z/2" : "0"}});
  o.require(dc.is_object() && dc["degrees"] == expect && dc["compatible"] == true, "D1 decorated cohomology");

  json qp = cli("c qprime", cyclic(2));
  o.require(qp.is_object() && qp["object"]["e"]["canonical"] == "Z" && qp["object"]["k1"] == json({{"2"}}) &&
                qp["object"]["k2"] == json({{"1"}}) && qp["object"]["m"] == json({{"1"}}) && qp["h"] == "Z/2",
            "Q′(Z/2) = [2Z ⊆ Z ⊆ Z ⊇ Z]");

  json sp = cli("dg semi-projective", {{"d", times(0, Z(), cyclic(2))}});
  o.require(sp.is_object() && sp["object"]["d"]["lift"] == json::array({json::array({"2", "0"})}) &&
                sp["object"]["d"]["src"]["canonical"] == "Z^2" && sp["object"]["d"]["dst"]["canonical"] == "Z" &&
                sp["object"]["h_m1"] == "Z" && sp["object"]["h_0"] == "Z/2",
            "semi-projective replacement of [Z →0 Z/2] is [Z² →(2 0) Z]");

  json les = cli("b les", f24());
  o.require(les.is_object() && les["sequence"] == "0→0→0→0→Z/2→Z/4→Z/2→0" && les["exact"] == true,
            "f24 long exact sequence");
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<void(Outcome&)> body;
  };
  const std::vector<Criterion> criteria{
      {"torsion-axioms", [](Outcome& o) { run(o, "torsion-axioms", 200); }},
      {"b-laws", [](Outcome& o) { run(o, "b-laws", 200); }},
      {"kernel-cokernel", [](Outcome& o) { run(o, "kernel-cokernel", 200); }},
      {"classify-oracle", [](Outcome& o) { run(o, "classify-oracle", 200); }},
      {"long-exact", [](Outcome& o) { run(o, "long-exact", 200); }},
      {"tot-roundtrip", [](Outcome& o) { run(o, "tot-roundtrip", 200); }},
      {"cohisom", [](Outcome& o) { run(o, "cohisom", 200); }},
      {"cohofcoh", [](Outcome& o) { run(o, "cohofcoh", 200); }},
      {"enrich/dgeq",
       [](Outcome& o) {
         run(o, "enrich", 100, 3);
         run(o, "dgeq", 50);
       }},
      {"cotilting-cover", [](Outcome& o) { run(o, "cotilting-cover", 100); }},
      {"hrs2", [](Outcome& o) { run(o, "hrs2", 100); }},
      {"worked-examples",
       [](Outcome& o) {
         run(o, "worked-examples", 1);
         worked_examples_cli(o);
       }},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("error: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].name << "\n";
    for (size_t k = 0; k < o.notes.size() && k < 5; ++k) std::cout << "        " << o.notes[k] << "\n";
    failed += !o.ok;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
