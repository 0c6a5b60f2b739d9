#ifndef NDTOPO_RECOGNITION_HPP
#define NDTOPO_RECOGNITION_HPP

#include <optional>
#include <string>

#include "ndtopo/graph.hpp"
#include "ndtopo/workspace.hpp"

namespace ndtopo {

struct Refutation {
    std::optional<VertexId> vertex;  // first offending vertex when known
    std::string reason;              // "rim-not-sphere", "disconnected", ...
};

struct SpaceClass {
    enum class Tag { sphere, manifold, disk, contractible, other };

    Tag tag = Tag::other;
    int dim = -1;                       // sphere/manifold/disk
    VertexSet boundary;                 // disk only
    std::optional<Refutation> witness;  // other only

    bool accepted() const { return tag != Tag::other; }

    static SpaceClass sphere(int n);
    static SpaceClass manifold(int n);
    static SpaceClass disk(int n, VertexSet boundary);
    static SpaceClass contractible_space();
    static SpaceClass other(std::optional<VertexId> v, std::string reason);
};

const char* space_tag_name(SpaceClass::Tag t);

// Normal n-sphere: n=0 iff exactly two non-adjacent points; n>0 iff
// connected, every rim is a normal (n-1)-sphere of one common dimension,
// and every vertex deletion leaves a contractible space. The dimension is
// inferred from the rims, never supplied.
SpaceClass classify_sphere(const Graph& g, Workspace& ws);

// Connected with every rim a normal (n-1)-sphere of one common dimension.
SpaceClass is_normal_manifold(const Graph& g, Workspace& ws);

// d is a normal n-disk with the given boundary iff the cone over the
// boundary (fresh apex = max id + 1) is a normal n-sphere.
SpaceClass is_normal_disk(const Graph& d, const VertexSet& boundary,
                          Workspace& ws);

struct DiskDecomposition {
    VertexSet boundary;
    VertexSet interior;
};

struct DiskGuess {
    bool ok = false;
    DiskDecomposition decomposition;
    SpaceClass verdict;  // is_normal_disk on the candidate split
};

// Candidate split: interior points are those whose rim classifies as a
// sphere, boundary the rest; the guess is then verified by is_normal_disk.
DiskGuess disk_boundary_heuristic(const Graph& d, Workspace& ws);

// Join of n+1 copies of S^0: 2(n+1) vertices, ids 0..2n+1, with 2k,2k+1
// the non-adjacent pairs.
Graph minimal_sphere(int n);

}  // namespace ndtopo

#endif
