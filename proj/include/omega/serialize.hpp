#pragma once

#include <string>

#include "json.hpp"

#include "omega/clambda.hpp"
#include "omega/permutation.hpp"
#include "omega/poset.hpp"

namespace omega {

nlohmann::json to_json(const Permutation& p);        // [1,6,5,2,3,4]
nlohmann::json to_json(const CyclicForm& c);         // [[1,2],[3],[4,5]]
nlohmann::json to_json(const Composition& lambda);   // [4,1,1]

// {"0": [[...], ...], "1": [...], ...} keyed by copy index.
nlohmann::json to_json(const CopyDecomposition& dec);

// {"n":..., "lambda":[...], "elements":[[...]], "ranks":[...],
//  "covers":[[lo,hi,i,j],...]}
nlohmann::json to_json(const GradedPoset& poset, const Composition& lambda);

// Hasse diagram as a DOT digraph, one node per element labeled with its
// one-line word and rank, covers labeled "(i,j)", ranks grouped.
std::string to_dot(const GradedPoset& poset);

}  // namespace omega
