#ifndef NDTOPO_LATTICE_HPP
#define NDTOPO_LATTICE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ndtopo/graph.hpp"
#include "ndtopo/workspace.hpp"

namespace ndtopo {

using LatticePoint = std::vector<int>;

// normal: max-norm distance <= 1 with componentwise-comparable parity
// vectors (Khalimsky product adjacency). complete: max-norm distance <= 1.
enum class AdjacencyRule { normal, complete };

const char* rule_name(AdjacencyRule r);
AdjacencyRule rule_from_name(const std::string& name);

struct WindowSpec {
    AdjacencyRule rule = AdjacencyRule::normal;
    std::vector<std::pair<int, int>> bounds;  // closed intervals [a_i, b_i]

    std::size_t arity() const { return bounds.size(); }
    std::size_t point_count() const;
    void validate() const;  // arity >= 1 and a_i <= b_i
};

std::vector<int> parity_vector(const LatticePoint& x);

enum class PointKind { pure, mixed };
PointKind point_kind(const LatticePoint& x);

bool lattice_adjacent(AdjacencyRule rule, const LatticePoint& x,
                      const LatticePoint& y);

std::string point_label(const LatticePoint& x);        // "(0,1)"
LatticePoint parse_point_label(const std::string& s);  // throws parse_error

/// A generated finite piece of Z^n or Y^n. Vertex ids enumerate the points
/// in odometer order (first axis slowest); coordinate labels ride on the
/// graph for reporting.
struct LatticeWindow {
    Graph graph;
    WindowSpec spec;
    std::vector<LatticePoint> points;  // vertex id -> coordinates

    std::optional<VertexId> id_of(const LatticePoint& p) const;
    const LatticePoint& point_of(VertexId v) const;
    bool is_interior(VertexId v) const;  // >= 1 away from every face
    VertexSet interior_vertices() const;
};

LatticeWindow generate_window(const WindowSpec& spec, Workspace& ws);

// Points of the box with at least one coordinate on a face; bounds must
// have even endpoints and length >= 2 per axis. The result induces a
// normal (n-1)-sphere in Z^n.
std::vector<LatticePoint> box_boundary_points(
    const std::vector<std::pair<int, int>>& bounds);

// The same boundary as vertex ids inside an enclosing window.
VertexSet box_boundary_sphere(const LatticeWindow& w,
                              const std::vector<std::pair<int, int>>& bounds);

// Graph on an explicit point set under the rule, labeled by coordinates.
Graph points_graph(AdjacencyRule rule, const std::vector<LatticePoint>& pts);

// Bounding box of pts inflated by margin on every axis.
WindowSpec box_around(const std::vector<LatticePoint>& pts, int margin,
                      AdjacencyRule rule = AdjacencyRule::normal);

// Z^2 window [0,p]^2 with opposite faces identified (p even, >= 4):
// p^2 vertices, a normal 2-manifold that is not a sphere.
Graph torus_quotient(int period, Workspace& ws);

}  // namespace ndtopo

#endif
