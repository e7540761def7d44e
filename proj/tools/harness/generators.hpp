#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "harness/json_io.hpp"
#include "tiltkit/dg/hom.hpp"

namespace tiltkit::harness {

struct GeneratorConfig {
  uint64_t seed = 42;
  size_t max_ambient_rank = 3;
  size_t max_relations = 4;
  long long entry_bound = 9;
  size_t max_complex_length = 4;
  size_t trials = 200;

  // Throws InvalidInput unless every bound is positive.
  void validate() const;
};

// Deterministic random instances. Each (seed, stream, index) triple gets its own engine, so
// trial i of a suite sees the same values whatever ran before it.
class Gen {
 public:
  Gen(const GeneratorConfig& cfg, const std::string& stream, uint64_t index);

  long long range(long long lo, long long hi);
  bool coin(int percent = 50) { return range(0, 99) < percent; }
  const GeneratorConfig& config() const { return cfg_; }

  IntMatrix matrix(size_t rows, size_t cols, long long bound);
  IntVec vec(size_t n, long long bound);

  FgGroup group();
  FgGroup group(size_t max_rank, size_t max_rels);
  FgGroup torsion_group();
  FgGroup free_group();
  Subgroup subgroup(const FgGroup& g);
  GroupMap map(const FgGroup& src, const FgGroup& dst, long long bound = 3);

  BObject b_object();
  StrictParts chain_map(const BObject& x, const BObject& y);
  Butterfly strict(const BObject& x, const BObject& y);
  // Usually not strict: a strict map out of a semi-projective replacement, precomposed with
  // the inverse of the replacement isomorphism.
  Butterfly butterfly(const BObject& x, const BObject& y);
  // Isomorphisms, zero maps, strict and non-strict maps in a fixed mix.
  Butterfly any_morphism(const BObject& x, const BObject& y);
  // A random element of the kernel of a homomorphism of finitely generated groups.
  IntVec kernel_element(const GroupMap& f);

  ChainComplex complex(int lo, size_t len);
  BComplex b_complex(size_t max_len);
  DecComplex compatible_complex(size_t max_len);
  DecComplex arbitrary_complex(size_t max_len);
  DecMap dec_map(const DecComplex& x, const DecComplex& y);
  DecMap compatible_map(size_t max_len);
  DecMap arbitrary_map(size_t max_len);
  BChainMap b_chain_map(size_t max_len);
  CObject c_object();

  // Element coordinates drawn from the solutions of a system, one map per unknown.
  std::vector<GroupMap> solution(const LinearMapSystem& sys, long long bound = 2);

 private:
  GeneratorConfig cfg_;
  std::mt19937_64 eng_;
};

// The kinds `gen` understands; dec_complex accepts the suffixes :compatible and :arbitrary.
const std::vector<std::string>& generator_kinds();
// `count` instances of `kind`, instance i drawn from stream ("gen:" + kind, i). Throws UnknownKind.
io::json generate(const std::string& kind, const GeneratorConfig& cfg, size_t count);

}  // namespace tiltkit::harness
