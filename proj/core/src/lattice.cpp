#include "ndtopo/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "ndtopo/errors.hpp"

namespace ndtopo {

const char* rule_name(AdjacencyRule r) {
    return r == AdjacencyRule::normal ? "normal" : "complete";
}

AdjacencyRule rule_from_name(const std::string& name) {
    if (name == "normal") return AdjacencyRule::normal;
    if (name == "complete") return AdjacencyRule::complete;
    throw parse_error("unknown adjacency rule '" + name +
                      "' (expected normal or complete)");
}

void WindowSpec::validate() const {
    if (bounds.empty()) {
        throw std::invalid_argument("window spec needs at least one axis");
    }
    for (const auto& [a, b] : bounds) {
        if (a > b) {
            throw std::invalid_argument(
                "window bound [" + std::to_string(a) + "," +
                std::to_string(b) + "] is inverted");
        }
    }
}

std::size_t WindowSpec::point_count() const {
    validate();
    std::size_t n = 1;
    for (const auto& [a, b] : bounds) {
        n *= static_cast<std::size_t>(b - a + 1);
    }
    return n;
}

std::vector<int> parity_vector(const LatticePoint& x) {
    std::vector<int> t(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        t[i] = ((x[i] % 2) + 2) % 2;
    }
    return t;
}

PointKind point_kind(const LatticePoint& x) {
    std::vector<int> t = parity_vector(x);
    for (int p : t) {
        if (p != t[0]) return PointKind::mixed;
    }
    return PointKind::pure;
}

bool lattice_adjacent(AdjacencyRule rule, const LatticePoint& x,
                      const LatticePoint& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("lattice points have different arity");
    }
    if (x == y) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::abs(x[i] - y[i]) > 1) return false;
    }
    if (rule == AdjacencyRule::complete) return true;
    // parity vectors must be comparable in one direction or the other
    std::vector<int> tx = parity_vector(x), ty = parity_vector(y);
    bool le = true, ge = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (tx[i] > ty[i]) le = false;
        if (tx[i] < ty[i]) ge = false;
    }
    return le || ge;
}

std::string point_label(const LatticePoint& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(x[i]);
    }
    s += ')';
    return s;
}

LatticePoint parse_point_label(const std::string& s) {
    if (s.size() < 3 || s.front() != '(' || s.back() != ')') {
        throw parse_error("bad coordinate label '" + s + "'");
    }
    LatticePoint p;
    std::size_t i = 1;
    while (i < s.size() - 1) {
        std::size_t end = s.find(',', i);
        if (end == std::string::npos || end > s.size() - 1) {
            end = s.size() - 1;
        }
        try {
            std::size_t used = 0;
            std::string tok = s.substr(i, end - i);
            int value = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            p.push_back(value);
        } catch (const std::exception&) {
            throw parse_error("bad coordinate label '" + s + "'");
        }
        i = end + 1;
    }
    if (p.empty()) throw parse_error("bad coordinate label '" + s + "'");
    return p;
}

std::optional<VertexId> LatticeWindow::id_of(const LatticePoint& p) const {
    if (p.size() != spec.arity()) return std::nullopt;
    std::size_t id = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& [a, b] = spec.bounds[i];
        if (p[i] < a || p[i] > b) return std::nullopt;
        id = id * static_cast<std::size_t>(b - a + 1) +
             static_cast<std::size_t>(p[i] - a);
    }
    return static_cast<VertexId>(id);
}

const LatticePoint& LatticeWindow::point_of(VertexId v) const {
    if (v >= points.size()) {
        throw std::invalid_argument("vertex id " + std::to_string(v) +
                                    " outside the window");
    }
    return points[v];
}

bool LatticeWindow::is_interior(VertexId v) const {
    const LatticePoint& p = point_of(v);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= spec.bounds[i].first || p[i] >= spec.bounds[i].second) {
            return false;
        }
    }
    return true;
}

VertexSet LatticeWindow::interior_vertices() const {
    VertexSet out;
    for (VertexId v = 0; v < points.size(); ++v) {
        if (is_interior(v)) out.push_back(v);
    }
    return out;
}

namespace {

std::vector<LatticePoint> enumerate_box(
    const std::vector<std::pair<int, int>>& bounds) {
    std::vector<LatticePoint> pts;
    LatticePoint cur(bounds.size());
    for (std::size_t i = 0; i < bounds.size(); ++i) cur[i] = bounds[i].first;
    for (;;) {
        pts.push_back(cur);
        std::size_t axis = bounds.size();
        while (axis > 0) {
            --axis;
            if (cur[axis] < bounds[axis].second) {
                ++cur[axis];
                for (std::size_t j = axis + 1; j < bounds.size(); ++j) {
                    cur[j] = bounds[j].first;
                }
                break;
            }
            if (axis == 0) return pts;
        }
    }
}

// All nonzero offset vectors in {-1,0,1}^n.
std::vector<LatticePoint> neighbor_offsets(std::size_t n) {
    std::vector<std::pair<int, int>> cube(n, {-1, 1});
    std::vector<LatticePoint> offs = enumerate_box(cube);
    offs.erase(std::remove(offs.begin(), offs.end(), LatticePoint(n, 0)),
               offs.end());
    return offs;
}

}  // namespace

LatticeWindow generate_window(const WindowSpec& spec, Workspace& ws) {
    spec.validate();
    std::size_t count = spec.point_count();
    if (count > ws.limits().window_cap) {
        throw budget_error("window of " + std::to_string(count) +
                           " points exceeds the cap of " +
                           std::to_string(ws.limits().window_cap));
    }
    LatticeWindow w;
    w.spec = spec;
    w.points = enumerate_box(spec.bounds);

    VertexSet verts(count);
    for (std::size_t i = 0; i < count; ++i) {
        verts[i] = static_cast<VertexId>(i);
    }
    std::vector<Edge> edges;
    std::map<VertexId, std::string> labels;
    std::vector<LatticePoint> offs = neighbor_offsets(spec.arity());
    for (std::size_t i = 0; i < count; ++i) {
        ws.charge();
        labels.emplace(static_cast<VertexId>(i), point_label(w.points[i]));
        for (const LatticePoint& off : offs) {
            LatticePoint q = w.points[i];
            for (std::size_t k = 0; k < q.size(); ++k) q[k] += off[k];
            auto j = w.id_of(q);
            if (!j || *j <= i) continue;
            if (lattice_adjacent(spec.rule, w.points[i], q)) {
                edges.emplace_back(static_cast<VertexId>(i), *j);
            }
        }
    }
    w.graph = Graph::build(std::move(verts), std::move(edges),
                           std::move(labels));
    return w;
}

std::vector<LatticePoint> box_boundary_points(
    const std::vector<std::pair<int, int>>& bounds) {
    if (bounds.empty()) {
        throw std::invalid_argument("box needs at least one axis");
    }
    for (const auto& [a, b] : bounds) {
        if (a % 2 != 0 || b % 2 != 0) {
            throw std::invalid_argument(
                "box boundary needs even endpoints, got [" +
                std::to_string(a) + "," + std::to_string(b) + "]");
        }
        if (b - a < 2) {
            throw std::invalid_argument(
                "box boundary needs side length >= 2, got [" +
                std::to_string(a) + "," + std::to_string(b) + "]");
        }
    }
    std::vector<LatticePoint> out;
    for (const LatticePoint& p : enumerate_box(bounds)) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == bounds[i].first || p[i] == bounds[i].second) {
                out.push_back(p);
                break;
            }
        }
    }
    return out;
}

VertexSet box_boundary_sphere(const LatticeWindow& w,
                              const std::vector<std::pair<int, int>>& bounds) {
    VertexSet ids;
    for (const LatticePoint& p : box_boundary_points(bounds)) {
        auto id = w.id_of(p);
        if (!id) {
            throw std::invalid_argument("box boundary point " +
                                        point_label(p) +
                                        " lies outside the window");
        }
        ids.push_back(*id);
    }
    return make_vertex_set(std::move(ids));
}

Graph points_graph(AdjacencyRule rule, const std::vector<LatticePoint>& pts) {
    if (pts.empty()) return Graph();
    std::size_t arity = pts[0].size();
    for (const auto& p : pts) {
        if (p.size() != arity) {
            throw std::invalid_argument("points have mixed arity");
        }
    }
    VertexSet verts;
    std::map<VertexId, std::string> labels;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        verts.push_back(static_cast<VertexId>(i));
        labels.emplace(static_cast<VertexId>(i), point_label(pts[i]));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i] == pts[j]) {
                throw std::invalid_argument("duplicate point " +
                                            point_label(pts[i]));
            }
            if (lattice_adjacent(rule, pts[i], pts[j])) {
                edges.emplace_back(static_cast<VertexId>(i),
                                   static_cast<VertexId>(j));
            }
        }
    }
    return Graph::build(std::move(verts), std::move(edges),
                        std::move(labels));
}

WindowSpec box_around(const std::vector<LatticePoint>& pts, int margin,
                      AdjacencyRule rule) {
    if (pts.empty()) {
        throw std::invalid_argument("cannot box an empty point set");
    }
    std::size_t arity = pts[0].size();
    WindowSpec spec;
    spec.rule = rule;
    spec.bounds.assign(arity, {0, 0});
    for (std::size_t i = 0; i < arity; ++i) {
        int lo = pts[0][i], hi = pts[0][i];
        for (const auto& p : pts) {
            if (p.size() != arity) {
                throw std::invalid_argument("points have mixed arity");
            }
            lo = std::min(lo, p[i]);
            hi = std::max(hi, p[i]);
        }
        spec.bounds[i] = {lo - margin, hi + margin};
    }
    return spec;
}

Graph torus_quotient(int period, Workspace& ws) {
    if (period < 4 || period % 2 != 0) {
        throw std::invalid_argument(
            "torus period must be even and at least 4");
    }
    WindowSpec spec;
    spec.rule = AdjacencyRule::normal;
    spec.bounds = {{0, period}, {0, period}};
    LatticeWindow w = generate_window(spec, ws);
    std::vector<VertexSet> classes;
    VertexSet corners;
    for (int a : {0, period}) {
        for (int b : {0, period}) corners.push_back(*w.id_of({a, b}));
    }
    classes.push_back(make_vertex_set(std::move(corners)));
    for (int j = 1; j < period; ++j) {
        classes.push_back(make_vertex_set(
            {*w.id_of({0, j}), *w.id_of({period, j})}));
        classes.push_back(make_vertex_set(
            {*w.id_of({j, 0}), *w.id_of({j, period})}));
    }
    return quotient_identify(w.graph, classes);
}

}  // namespace ndtopo
