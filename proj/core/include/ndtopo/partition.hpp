#ifndef NDTOPO_PARTITION_HPP
#define NDTOPO_PARTITION_HPP

#include <optional>
#include <string>

#include "ndtopo/canonical.hpp"
#include "ndtopo/graph.hpp"
#include "ndtopo/lattice.hpp"
#include "ndtopo/recognition.hpp"
#include "ndtopo/workspace.hpp"

namespace ndtopo {

enum class ExteriorSide { none, a, b };

struct PartitionResult {
    VertexSet a;
    VertexSet s;
    VertexSet b;
    ExteriorSide exterior = ExteriorSide::none;
};

struct PartitionOutcome {
    bool ok = false;
    PartitionResult partition;        // valid when ok
    std::size_t component_count = 0;  // components of m - s
};

// Components of m - s; succeeds iff there are exactly two. A is the
// component containing the least remaining vertex id.
PartitionOutcome partition_by_surface(const Graph& m, const VertexSet& s);

struct PartitionCheck {
    bool ok = false;
    bool degenerate = false;  // a or b empty: allowed but flagged
    std::string reason;
    std::optional<Edge> witness_edge;  // an offending a-b edge
};

// Cover, disjointness, and a-b non-adjacency per the partition definition.
PartitionCheck verify_partition(const Graph& m, const PartitionResult& p);

struct BiconditionalReport {
    bool whole = false;   // contractible(m)
    bool side_a = false;  // contractible(a u s)
    bool side_b = false;  // contractible(s u b)
    bool holds = false;
};

// Requires a verified partition with contractible s and nonempty a, b.
// Evaluates both sides of the contractible-partition biconditional; a
// disagreement falsifies the engine and throws logic_error.
BiconditionalReport check_contractible_partition(const Graph& m,
                                                 const PartitionResult& p,
                                                 Workspace& ws);

struct GlueResult {
    Graph glued;
    SpaceClass sphere_verdict;
    VertexSet seam;  // image of the identified boundaries in the glued graph
    bool seam_separates = false;
};

// Disjoint union of two normal n-disks, then identification of matched
// boundary pairs. m must be an isomorphism between the induced boundary
// subgraphs (it is verified, never searched for).
GlueResult glue_disks(const Graph& g, const VertexSet& boundary_g,
                      const Graph& h, const VertexSet& boundary_h,
                      const IsoMap& m, Workspace& ws);

struct JordanResult {
    bool accepted = false;
    std::string refutation;  // "surface-not-sphere", "component-count",
                             // "closure-not-disk"
    SpaceClass surface_class;
    PartitionResult partition;  // exterior marked as side a
    std::size_t component_count = 0;
    SpaceClass disk_verdict;  // is_normal_disk(s u b, s)
};

// Jordan separation inside a finite window: s must classify as a normal
// (n-1)-sphere and the window must extend at least 2 beyond s's bounding
// box on every axis (so the exterior stays connected in the window). The
// component containing the window corner is the exterior and lands in a.
JordanResult jordan_partition(const LatticeWindow& w, const VertexSet& s,
                              Workspace& ws);

}  // namespace ndtopo

#endif
