#pragma once

// JSON forms of the report objects. Scalars and polynomials are written in
// their canonical textual form and read back with the same grammar.

#include "json.hpp"

#include "gwa/cyclegwa.hpp"
#include "gwa/modstruct.hpp"
#include "gwa/morita.hpp"
#include "gwa/roottype.hpp"

namespace gwa {

using Json = nlohmann::ordered_json;

Json to_json(const TypeSignature& sig);
Json to_json(const DegreeInterval& d);
Json to_json(const SimpleLabel& label);
Json to_json(const CompositionSeries& series);
Json to_json(const SubmoduleDescriptor& s);
Json to_json(const ProjectiveData& p);
Json to_json(const OPlusBlock& b);
Json to_json(const MoveStep& step);
Json to_json(const MoritaWitness& w);

/// Throws parse_error on malformed documents.
MoritaWitness witness_from_json(const Json& j);
CycleData cycle_from_json(const Json& j);
/// The optional "v" list of a cycle document.
std::optional<std::vector<FactoredPoly>> claimed_v_from_json(const Json& j);

}  // namespace gwa
