#pragma once

#include <json.hpp>

#include <string>

#include "superbrauer/diagram.hpp"
#include "superbrauer/kernels.hpp"
#include "superbrauer/sparse.hpp"
#include "superbrauer/superspace.hpp"
#include "superbrauer/verify.hpp"

namespace superbrauer {

// Wire formats. Points and permutation images are 1-based in JSON; rationals
// are decimal-free strings ("3/2", "-1").

/// {"p": 4, "q": 0, "arcs": [[1,2],[3,4]]} with arcs in canonical order.
nlohmann::json diagram_to_json(const BrauerDiagram& diagram);
BrauerDiagram diagram_from_json(const nlohmann::json& j);

/// {"p":…, "q":…, "delta": -1, "terms": [{"arcs": …, "coeff": "3/2"}]}.
nlohmann::json hom_to_json(const HomElement& x);
/// Accepts either the hom format or a bare diagram (coefficient 1, with the
/// loop parameter supplied as a fallback).
HomElement hom_from_json(const nlohmann::json& j, long long fallback_delta);

/// One-line image array, 1-based: [2,1,3] maps 1 to 2, 2 to 1, 3 to 3.
nlohmann::json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const nlohmann::json& j);

/// {"rows": R, "cols": C, "entries": [[r, c, "v"], ...]} with 0-based indices
/// in row-major order.
nlohmann::json matrix_to_json(const SparseMatrix& m);
SparseMatrix matrix_from_json(const nlohmann::json& j);

/// Tensor operator with its grading header:
/// {"m":…, "n":…, "r":…, "order": "row-major", "matrix": {…}}.
nlohmann::json operator_to_json(const SuperSpace& space, std::size_t r,
                                const SparseMatrix& matrix);

nlohmann::json kernel_result_to_json(const KernelResult& result,
                                     bool include_basis);

nlohmann::json report_to_json(const VerificationReport& report);

nlohmann::json experiment_to_json(const MinKernelExperiment& experiment);

}  // namespace superbrauer
