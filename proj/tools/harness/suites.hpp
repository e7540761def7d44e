#pragma once

#include <string>
#include <vector>

#include "harness/generators.hpp"

namespace tiltkit::harness {

struct SuiteFailure {
  size_t trial = 0;
  std::string clause;
  io::json counterexample;  // the inputs of the failing trial, in the CLI formats
};

struct VerificationReport {
  std::string suite;
  size_t trials = 0;
  std::vector<SuiteFailure> failures;
  double seconds = 0;

  bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();
// Runs cfg.trials trials (worked-examples runs once). Throws UnknownSuite.
VerificationReport run_suite(const std::string& name, const GeneratorConfig& cfg);
io::json to_json(const VerificationReport& r);

// Hom_B(w, x) → Hom_B(w, y), f ↦ p∘f.
GroupMap post_compose(const BHom& wx, const BHom& wy, const Butterfly& p);
// Hom_B(y, w) → Hom_B(x, w), f ↦ f∘p.
GroupMap pre_compose(const BHom& yw, const BHom& xw, const Butterfly& p);

}  // namespace tiltkit::harness
