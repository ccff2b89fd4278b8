#pragma once

#include <cstddef>
#include <nlohmann/json_fwd.hpp>

#include "lps/numberfield.hpp"
#include "lps/series.hpp"

namespace lps {

// Coefficient source from JSON:
//   {"type":"zeta"} | {"type":"moebius"} | {"type":"sharp-example","k":int}
//   | {"type":"coeff-list","values":[[re,im],...]}
//   | {"type":"dedekind","field":{...FieldSpec...}}
// Throws std::invalid_argument naming the offending field.
CoefficientSeries series_from_json(const nlohmann::json& j, size_t N);

// FieldSpec from JSON:
//   {"type":"quadratic","disc":-4} | {"type":"cyclotomic","q":5}
//   | {"type":"custom","degree":n0,"rules":{"2":[[2,1]]},"default":[[1,1]]}
//   | {"type":"rational"}
nf::FieldSpec field_from_json(const nlohmann::json& j);

}  // namespace lps
