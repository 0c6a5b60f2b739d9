#ifndef NDTOPO_CANONICAL_HPP
#define NDTOPO_CANONICAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ndtopo/graph.hpp"
#include "ndtopo/workspace.hpp"

namespace ndtopo {

// Vertex bijection between two graphs (or two vertex subsets), sorted by
// the first component.
struct IsoMap {
    std::vector<std::pair<VertexId, VertexId>> pairs;

    std::optional<VertexId> image(VertexId v) const;
    IsoMap inverse() const;
};

struct IsoVerdict {
    bool isomorphic = false;
    IsoMap map;              // valid when isomorphic
    std::string refutation;  // valid when not
};

// Exact canonical form: equal byte strings iff the graphs are isomorphic.
// Deterministic across runs. Throws cap_error above `cap` vertices.
std::string canonical_code(const Graph& g, std::size_t cap = 40,
                           Workspace* ws = nullptr);

struct CanonicalForm {
    std::string code;
    // position i in the canonical order -> vertex id of g
    std::vector<VertexId> order;
};
CanonicalForm canonical_form(const Graph& g, std::size_t cap = 40,
                             Workspace* ws = nullptr);

// With a map given, verifies edge preservation in both directions.
// Without one, searches: canonical forms under the cap, plain backtracking
// above it. Refutation is a normal verdict, never an error.
IsoVerdict isomorphism_check(const Graph& g, const Graph& h,
                             const std::optional<IsoMap>& m = std::nullopt,
                             Workspace* ws = nullptr);

}  // namespace ndtopo

#endif
