#include "ndtopo/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "ndtopo/homotopy.hpp"

namespace ndtopo {

PartitionOutcome partition_by_surface(const Graph& m, const VertexSet& s) {
    for (VertexId v : s) {
        if (!m.has_vertex(v)) {
            throw std::invalid_argument("surface vertex " +
                                        std::to_string(v) +
                                        " is not in the space");
        }
    }
    VertexSet rest = set_difference(m.vertices(), s);
    if (rest.empty()) {
        throw std::invalid_argument(
            "surface covers the whole space; nothing to separate");
    }
    PartitionOutcome out;
    std::vector<VertexSet> comps =
        connected_components(induced_subgraph(m, rest));
    out.component_count = comps.size();
    if (comps.size() != 2) return out;
    out.ok = true;
    out.partition.a = std::move(comps[0]);
    out.partition.s = s;
    out.partition.b = std::move(comps[1]);
    return out;
}

PartitionCheck verify_partition(const Graph& m, const PartitionResult& p) {
    PartitionCheck check;
    VertexSet all = set_union(set_union(p.a, p.s), p.b);
    if (all != m.vertices()) {
        check.reason = "sets do not cover the space exactly";
        return check;
    }
    if (all.size() != p.a.size() + p.s.size() + p.b.size()) {
        check.reason = "sets overlap";
        return check;
    }
    for (VertexId u : p.a) {
        for (VertexId w : m.neighbors(u)) {
            if (set_contains(p.b, w)) {
                check.reason = "a and b are adjacent";
                check.witness_edge = Edge{std::min(u, w), std::max(u, w)};
                return check;
            }
        }
    }
    check.ok = true;
    check.degenerate = p.a.empty() || p.b.empty();
    return check;
}

BiconditionalReport check_contractible_partition(const Graph& m,
                                                 const PartitionResult& p,
                                                 Workspace& ws) {
    PartitionCheck check = verify_partition(m, p);
    if (!check.ok) {
        throw std::invalid_argument("invalid partition: " + check.reason);
    }
    if (p.a.empty() || p.b.empty()) {
        throw std::invalid_argument(
            "degenerate partition: a and b must be non-empty");
    }
    if (!contractible(induced_subgraph(m, p.s), ws)) {
        throw std::invalid_argument(
            "separating space is not contractible");
    }
    BiconditionalReport report;
    report.whole = contractible(m, ws);
    report.side_a = contractible(induced_subgraph(m, set_union(p.a, p.s)), ws);
    report.side_b = contractible(induced_subgraph(m, set_union(p.s, p.b)), ws);
    report.holds = report.whole == (report.side_a && report.side_b);
    if (!report.holds) {
        throw std::logic_error(
            "contractible-partition biconditional violated: engine defect");
    }
    return report;
}

GlueResult glue_disks(const Graph& g, const VertexSet& boundary_g,
                      const Graph& h, const VertexSet& boundary_h,
                      const IsoMap& m, Workspace& ws) {
    SpaceClass dg = is_normal_disk(g, boundary_g, ws);
    if (dg.tag != SpaceClass::Tag::disk) {
        throw std::invalid_argument(
            "first graph is not a normal disk with the given boundary");
    }
    SpaceClass dh = is_normal_disk(h, boundary_h, ws);
    if (dh.tag != SpaceClass::Tag::disk) {
        throw std::invalid_argument(
            "second graph is not a normal disk with the given boundary");
    }
    if (dg.dim != dh.dim) {
        throw std::invalid_argument("disk dimensions differ");
    }
    IsoVerdict iv = isomorphism_check(induced_subgraph(g, boundary_g),
                                      induced_subgraph(h, boundary_h), m,
                                      &ws);
    if (!iv.isomorphic) {
        throw std::invalid_argument("boundary map is not an isomorphism: " +
                                    iv.refutation);
    }

    VertexId shift = g.empty() ? 0 : g.vertices().back() + 1;
    std::map<VertexId, VertexId> shift_map;
    for (VertexId v : h.vertices()) shift_map[v] = v + shift;
    Graph hs = relabel(h, shift_map);

    std::vector<Edge> edges = g.edges();
    auto hedges = hs.edges();
    edges.insert(edges.end(), hedges.begin(), hedges.end());
    std::map<VertexId, std::string> labels = g.labels();
    for (const auto& [v, text] : hs.labels()) labels.emplace(v, text);
    Graph disjoint = Graph::build(set_union(g.vertices(), hs.vertices()),
                                  std::move(edges), std::move(labels));

    std::vector<VertexSet> classes;
    for (const auto& [x, y] : iv.map.pairs) {
        classes.push_back(make_vertex_set({x, y + shift}));
    }
    GlueResult out;
    out.glued = quotient_identify(disjoint, classes);
    out.seam = boundary_g;  // class representatives keep g's ids
    out.sphere_verdict = classify_sphere(out.glued, ws);
    PartitionOutcome po = partition_by_surface(out.glued, out.seam);
    out.seam_separates = po.ok;
    return out;
}

JordanResult jordan_partition(const LatticeWindow& w, const VertexSet& s,
                              Workspace& ws) {
    if (s.empty()) throw std::invalid_argument("empty surface");
    for (VertexId v : s) {
        if (v >= w.points.size()) {
            throw std::invalid_argument("surface vertex " +
                                        std::to_string(v) +
                                        " is outside the window");
        }
    }
    // margin >= 2 between s's bounding box and the window on every axis
    for (std::size_t axis = 0; axis < w.spec.arity(); ++axis) {
        int lo = w.point_of(s.front())[axis], hi = lo;
        for (VertexId v : s) {
            lo = std::min(lo, w.point_of(v)[axis]);
            hi = std::max(hi, w.point_of(v)[axis]);
        }
        if (lo - w.spec.bounds[axis].first < 2 ||
            w.spec.bounds[axis].second - hi < 2) {
            throw std::invalid_argument(
                "window margin around the surface is below 2 on axis " +
                std::to_string(axis));
        }
    }

    JordanResult r;
    r.surface_class = classify_sphere(induced_subgraph(w.graph, s), ws);
    if (r.surface_class.tag != SpaceClass::Tag::sphere) {
        r.refutation = "surface-not-sphere";
        return r;
    }
    PartitionOutcome out = partition_by_surface(w.graph, s);
    r.component_count = out.component_count;
    if (!out.ok) {
        r.refutation = "component-count";
        return r;
    }
    r.partition = std::move(out.partition);
    LatticePoint corner(w.spec.arity());
    for (std::size_t i = 0; i < corner.size(); ++i) {
        corner[i] = w.spec.bounds[i].first;
    }
    VertexId corner_id = *w.id_of(corner);
    if (!set_contains(r.partition.a, corner_id)) {
        std::swap(r.partition.a, r.partition.b);
    }
    r.partition.exterior = ExteriorSide::a;

    r.disk_verdict = is_normal_disk(
        induced_subgraph(w.graph, set_union(s, r.partition.b)), s, ws);
    r.accepted = r.disk_verdict.tag == SpaceClass::Tag::disk;
    if (!r.accepted) r.refutation = "closure-not-disk";
    return r;
}

}  // namespace ndtopo
