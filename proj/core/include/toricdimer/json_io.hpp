#pragma once

#include <string>

#include <json.hpp>

#include "toricdimer/circulant.hpp"
#include "toricdimer/families.hpp"
#include "toricdimer/kasteleyn.hpp"
#include "toricdimer/matchings.hpp"
#include "toricdimer/newton.hpp"
#include "toricdimer/torus_graph.hpp"

namespace toricdimer::json {

using Json = nlohmann::json;                // reports: keys sorted
using OrderedJson = nlohmann::ordered_json;  // graph files: keys in canonical order

/// {"num_white", "num_black", "edges": [[w,b,dx,dy],...], "rotation": {"white", "black"}},
/// keys in that order, "rotation" omitted when absent.
OrderedJson graph_to_json(const TorusGraph& g);

/// Compact canonical text of graph_to_json.
std::string graph_to_string(const TorusGraph& g);

/// Lenient reader: any key order, any whitespace. Throws Errc::ParseError on
/// missing fields or wrong types; does not validate index ranges.
TorusGraph graph_from_json(const Json& j);
TorusGraph graph_from_string(const std::string& text);

Json matching_to_json(const Matching& m);
/// Accepts a JSON array of edge ids.
Matching matching_from_json(const Json& j);

Json bigint_to_json(const BigInt& v);
Json vec_to_json(Vec2 v);

Json validation_to_json(const ValidationReport& r);
Json faces_to_json(const FaceSet& fs);
Json transition_to_json(const TransitionCycles& tc);
Json divide_to_json(const DivideReport& r);
Json height_field_to_json(const HeightField& f);

/// {"terms": [{"c", "i", "j"}, ...]} with terms ascending in (i, j).
Json poly_to_json(const LaurentPoly2& p);
LaurentPoly2 poly_from_json(const Json& j);
Json four_eval_to_json(const FourEvaluation& fe);

/// {"full_support", "hull", "lattice_points", "missing", "realized": [[[x,y],count],...]}
Json newton_to_json(const NewtonReport& r);

Json lattice_path_to_json(const LatticePath& p);
Json hamilton_to_json(const HamiltonResult& r);
Json realization_to_json(const Realization& r);
Json bnr_support_to_json(const BnrSupportReport& r);
Json lozenge_check_to_json(const CheckReport& r);
Json triple_mapping_to_json(const TripleMapping& m);

}  // namespace toricdimer::json
