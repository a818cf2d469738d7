#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "eac/activity.hpp"
#include "eac/complexes.hpp"
#include "eac/matroid.hpp"

// JSON (de)serialization for the CLI. All emitted lists are deterministic:
// element sets ascend, signed vertex sets list plain elements ascending and
// then barred ones ascending (a barred element e is encoded as -e).

namespace eac::json_io {

using Json = nlohmann::ordered_json;

// Descriptor formats:
//   {"type": "bases",   "n": 5, "order": [1..5], "bases": [[1,2,4], ...]}
//   {"type": "graph",   "vertices": 4, "edges": [[1,2], [1,3], ...]}
//   {"type": "uniform", "n": 3, "k": 1}
// "order" is optional everywhere and defaults to the natural order.
OrderedMatroid parse_matroid(const Json& doc);
OrderedMatroid parse_matroid_text(const std::string& text);

Json elemset_to_json(ElemSet s);

// Signed vertex set of a complex face, using the complex's slot labels.
Json face_to_json(const SimplicialComplex& k, std::uint64_t mask);

Json activity_to_json(const BasisActivity& act);
Json tutte_to_json(const TuttePolynomial& t);
Json complex_to_json(const SimplicialComplex& k);
Json shelling_report_to_json(const SimplicialComplex& k,
                             const ShellingReport& report,
                             const std::vector<int>& facet_order);

}  // namespace eac::json_io
