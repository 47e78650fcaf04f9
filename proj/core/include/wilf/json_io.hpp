#pragma once

#include <nlohmann/json.hpp>

#include "wilf/enumeration.hpp"
#include "wilf/fillings.hpp"
#include "wilf/matching.hpp"
#include "wilf/paths.hpp"
#include "wilf/pipeline.hpp"
#include "wilf/tableaux.hpp"

namespace wilf {

using json = nlohmann::json;

// Permutation <-> [5,4,7,...]
json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

// Partition <-> [4,3,2]
json to_json(const Partition& p);
Partition partition_from_json(const json& j);

// StandardYoungTableau <-> [[1,4,6],[2,5],[3]]
json to_json(const StandardYoungTableau& t);
StandardYoungTableau syt_from_json(const json& j);

// Transversal <-> {"rows":[8,8,5], "ones":[[1,2],[2,1],[3,3]]} with 1-indexed
// [column,row] pairs.
json to_json(const Transversal& t);
Transversal transversal_from_json(const json& j);

// Matching <-> [[1,8],[2,15],...]
json to_json(const Matching& m);
Matching matching_from_json(const json& j);

// OscillatingTableau <-> [[],[1],[1,1],...]
json to_json(const OscillatingTableau& o);
OscillatingTableau oscillating_from_json(const json& j);

// LatticePath <-> {"steps":"UUD...","start":0}; DyckPair <-> {"P":"...","Q":"..."}
json to_json(const LatticePath& p);
LatticePath path_from_json(const json& j);
json to_json(const DyckPair& pair);
DyckPair pair_from_json(const json& j);

json to_json(const PipelineTrace& trace);
json to_json(const VerificationReport& rep);

}  // namespace wilf
