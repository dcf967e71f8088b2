#pragma once

#include <string>

#include <json.hpp>

#include "adenets/classify.hpp"
#include "adenets/fusion.hpp"
#include "adenets/sweep.hpp"
#include "adenets/theta.hpp"

namespace adenets {

using Json = nlohmann::ordered_json;

// JSON layouts are documented in docs/json-schema.md.

Json to_json(const MinimalMultiset& theta);  // [{"j","k","mult"}], sorted by (j,k)
Json to_json(const Su2Multiset& theta);      // [{"j","mult"}]
Json to_json(const std::vector<NormalizedTerm>& terms);  // [{"a","b","mult"}]
Json to_json(const Su2Invariant& inv);
Json to_json(const VirInvariant& inv);  // includes "known_local"
Json to_json(const BratteliDiagram& b);
Json to_json(const DisjointnessReport& r);
Json to_json(const NimrepCheck& c);
Json to_json(const ThetaCheck& c);
Json to_json(const Table41Row& row);

/// Full pipeline result for one invariant.
Json theta_json(const VirInvariant& inv, const FusionGraph& fg, const CanonicalEndo& endo,
                const OrbitGraph& vertical);

/// Fusion graph as Graphviz: horizontal edges solid, vertical edges dashed,
/// the distinguished class drawn as a double circle. Loops of folded orbits
/// appear as self edges.
std::string to_dot(const FusionGraph& fg);

}  // namespace adenets
