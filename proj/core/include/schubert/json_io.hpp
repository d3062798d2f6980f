#pragma once

#include <json.hpp>

#include "schubert/curvature.hpp"
#include "schubert/grassmannian.hpp"
#include "schubert/lambda_ring.hpp"
#include "schubert/rational_matrix.hpp"
#include "schubert/schur_ring.hpp"
#include "schubert/verify.hpp"

namespace schubert {

// Wire formats. Partition keys are the "a,b,c" text form; rationals are
// emitted as plain integers when integral and "p/q" strings otherwise, and
// accepted in either form.

nlohmann::json to_json(const SchurCombination& c);
SchurCombination schur_combination_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CohomologyClass& c);

nlohmann::json to_json(const EPolynomial& p);

nlohmann::json to_json(const RationalMatrix& m);
RationalMatrix rational_matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Laurent& x);          // {"rank":n,"terms":{...}}
Laurent laurent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GradedPolynomial& p);

nlohmann::json to_json(const VerificationReport& r);

nlohmann::json rational_to_json(const mpq_class& q);
mpq_class rational_from_json(const nlohmann::json& j);

}  // namespace schubert
