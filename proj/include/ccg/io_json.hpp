#pragma once

// JSON schemas for the file formats and machine output. Matrices:
//   { "field": "Q" | "Fp:<p>", "n": <int>, "entries": [[<scalar-string>,...],...] }
// with rationals rendered "num/den" (or "num" when the denominator is 1).
// Chains are arrays of matrix objects. All emitters use ordered_json so a
// given value always serializes to the same bytes.

#include <variant>

#include "ccg/chain.hpp"
#include "ccg/classifier.hpp"
#include "ccg/graph_engine.hpp"
#include "ccg/matrix.hpp"
#include "ccg/witness.hpp"

#include "json.hpp"

namespace ccg {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const Matrix<RationalField>& m);
Json matrix_to_json(const Matrix<PrimeField>& m);

using AnyMatrix = std::variant<Matrix<RationalField>, Matrix<PrimeField>>;
AnyMatrix matrix_from_json(const Json& j);

Json chain_to_json(const CommutingChain<RationalField>& chain);
Json chain_to_json(const CommutingChain<PrimeField>& chain);

using AnyChain = std::variant<CommutingChain<RationalField>, CommutingChain<PrimeField>>;
AnyChain chain_from_json(const Json& j);

Json summary_to_json(const CommutingGraphSummary& s, bool include_timing = false);

Json verdict_to_json(const DiameterVerdict& v);

Json witness_report_to_json(const WitnessRunReport& r);
Json witness_run_to_json(const WitnessRun<PrimeField>& run, bool include_matrices);
Json witness_run_to_json(const WitnessRun<RationalField>& run, bool include_matrices);

}  // namespace ccg
