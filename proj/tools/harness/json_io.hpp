#pragma once

#include <nlohmann/json.hpp>

#include "tiltkit/bridge/tot.hpp"
#include "tiltkit/decorated/decorated.hpp"
#include "tiltkit/second/c_category.hpp"

// JSON encodings shared by the CLI and the verification harness. Integers travel as decimal
// strings, matrices as row-major arrays of rows. Malformed input throws InvalidInput.
namespace tiltkit::io {

using json = nlohmann::json;

json to_json(const Int& v);
json to_json(const IntVec& v);
json to_json(const IntMatrix& m);
json to_json(const CanonicalForm& c);
json to_json(const FgGroup& g);  // carries "canonical" for readers; ignored on input
json to_json(const GroupMap& f);
json to_json(const BObject& x);
json to_json(const Butterfly& p);
json to_json(const ChainComplex& c);
json to_json(const DecComplex& d);
json to_json(const DecMap& f);
json to_json(const BComplex& x);
json to_json(const BChainMap& f);
json to_json(const CObject& c);

Int parse_int(const json& j);
IntVec parse_vec(const json& j);
// rows/cols fix the shape when the array is empty or has empty rows.
IntMatrix parse_matrix(const json& j, size_t rows, size_t cols);
IntMatrix parse_matrix(const json& j);
FgGroup parse_group(const json& j);
GroupMap parse_map(const json& j);
// Generator lifts as the columns of a matrix with `ambient.ambient_rank()` rows.
Subgroup parse_subgroup(const json& j, const FgGroup& ambient);
BObject parse_b_object(const json& j);
// Either the full five-map form or {"src", "dst", "strict": {"m1": lift, "zero": lift}}.
Butterfly parse_butterfly(const json& j);
ChainComplex parse_chain_complex(const json& j);
DecComplex parse_dec_complex(const json& j);
DecMap parse_dec_map(const json& j);
BComplex parse_b_complex(const json& j);
BChainMap parse_b_chain_map(const json& j);
CObject parse_c_object(const json& j);

}  // namespace tiltkit::io
