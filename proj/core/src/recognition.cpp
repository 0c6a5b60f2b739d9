#include "ndtopo/recognition.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>

#include "ndtopo/canonical.hpp"
#include "ndtopo/homotopy.hpp"

namespace ndtopo {

SpaceClass SpaceClass::sphere(int n) {
    SpaceClass s;
    s.tag = Tag::sphere;
    s.dim = n;
    return s;
}

SpaceClass SpaceClass::manifold(int n) {
    SpaceClass s;
    s.tag = Tag::manifold;
    s.dim = n;
    return s;
}

SpaceClass SpaceClass::disk(int n, VertexSet boundary) {
    SpaceClass s;
    s.tag = Tag::disk;
    s.dim = n;
    s.boundary = std::move(boundary);
    return s;
}

SpaceClass SpaceClass::contractible_space() {
    SpaceClass s;
    s.tag = Tag::contractible;
    return s;
}

SpaceClass SpaceClass::other(std::optional<VertexId> v, std::string reason) {
    SpaceClass s;
    s.tag = Tag::other;
    s.witness = Refutation{v, std::move(reason)};
    return s;
}

const char* space_tag_name(SpaceClass::Tag t) {
    switch (t) {
        case SpaceClass::Tag::sphere: return "sphere";
        case SpaceClass::Tag::manifold: return "manifold";
        case SpaceClass::Tag::disk: return "disk";
        case SpaceClass::Tag::contractible: return "contractible";
        case SpaceClass::Tag::other: return "other";
    }
    return "?";
}

namespace {

std::size_t memo_cap(const Workspace& ws) {
    return std::min<std::size_t>(ws.limits().canonical_cap, 64);
}

// Evaluates fn(i) for i in [0, count), strided across ws.limits().jobs
// workers when more than one is configured. Results land at their index,
// so verdicts do not depend on scheduling.
template <typename T, typename Fn>
std::vector<T> indexed_map(std::size_t count, Workspace& ws, Fn&& fn) {
    std::vector<T> out(count);
    unsigned jobs = std::max(1u, ws.limits().jobs);
    if (jobs == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(count));
    std::vector<std::future<void>> workers;
    workers.reserve(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        workers.push_back(std::async(std::launch::async, [&, w] {
            try {
                for (std::size_t i = w; i < count; i += jobs) out[i] = fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        }));
    }
    for (auto& f : workers) f.wait();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

// Rim verdicts for every vertex, ascending id order.
std::vector<SpaceClass> rim_verdicts(const Graph& g, Workspace& ws) {
    const VertexSet& verts = g.vertices();
    return indexed_map<SpaceClass>(verts.size(), ws, [&](std::size_t i) {
        return classify_sphere(rim(g, verts[i]), ws);
    });
}

// First vertex whose rim is not a sphere, then dimension uniformity.
std::optional<SpaceClass> rim_refutation(
    const VertexSet& verts, const std::vector<SpaceClass>& rims) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (rims[i].tag != SpaceClass::Tag::sphere) {
            return SpaceClass::other(verts[i], "rim-not-sphere");
        }
    }
    for (std::size_t i = 1; i < verts.size(); ++i) {
        if (rims[i].dim != rims[0].dim) {
            return SpaceClass::other(verts[i], "rim-dimension-mismatch");
        }
    }
    return std::nullopt;
}

}  // namespace

SpaceClass classify_sphere(const Graph& g, Workspace& ws) {
    const std::size_t n_verts = g.vertex_count();
    if (n_verts == 2 && g.edge_count() == 0) return SpaceClass::sphere(0);

    std::optional<std::string> code;
    if (n_verts >= 2 && n_verts <= memo_cap(ws)) {
        code = canonical_code(g, ws.limits().canonical_cap, &ws);
        if (auto hit = ws.cached_sphere_dim(*code)) {
            return SpaceClass::sphere(*hit);
        }
    }

    if (n_verts == 0) return SpaceClass::other(std::nullopt, "empty");
    if (n_verts == 1) {
        return SpaceClass::other(g.vertices().front(), "single-point");
    }
    if (!is_connected(g)) {
        return SpaceClass::other(std::nullopt, "disconnected");
    }

    const VertexSet& verts = g.vertices();
    std::vector<SpaceClass> rims = rim_verdicts(g, ws);
    if (auto refutation = rim_refutation(verts, rims)) return *refutation;
    int dim = rims[0].dim + 1;

    std::vector<char> ok = indexed_map<char>(
        verts.size(), ws, [&](std::size_t i) -> char {
            return contractible(without_vertex(g, verts[i]), ws) ? 1 : 0;
        });
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (!ok[i]) {
            return SpaceClass::other(verts[i], "deletion-not-contractible");
        }
    }

    if (code) ws.remember_sphere_dim(*code, dim);
    return SpaceClass::sphere(dim);
}

SpaceClass is_normal_manifold(const Graph& g, Workspace& ws) {
    if (g.empty()) return SpaceClass::other(std::nullopt, "empty");
    if (!is_connected(g)) {
        return SpaceClass::other(std::nullopt, "disconnected");
    }
    const VertexSet& verts = g.vertices();
    std::vector<SpaceClass> rims = rim_verdicts(g, ws);
    if (auto refutation = rim_refutation(verts, rims)) return *refutation;
    return SpaceClass::manifold(rims[0].dim + 1);
}

SpaceClass is_normal_disk(const Graph& d, const VertexSet& boundary,
                          Workspace& ws) {
    for (VertexId v : boundary) {
        if (!d.has_vertex(v)) {
            throw std::invalid_argument("boundary vertex " +
                                        std::to_string(v) +
                                        " is not in the graph");
        }
    }
    VertexId apex = d.empty() ? 0 : d.vertices().back() + 1;
    Graph cone = with_vertex(d, apex, boundary);
    SpaceClass s = classify_sphere(cone, ws);
    if (s.tag == SpaceClass::Tag::sphere) {
        return SpaceClass::disk(s.dim, boundary);
    }
    std::optional<VertexId> witness;
    std::string inner = "cone-not-sphere";
    if (s.witness) {
        if (s.witness->vertex && *s.witness->vertex != apex) {
            witness = s.witness->vertex;
        }
        inner += ":" + s.witness->reason;
    }
    return SpaceClass::other(witness, inner);
}

DiskGuess disk_boundary_heuristic(const Graph& d, Workspace& ws) {
    DiskGuess out;
    for (VertexId v : d.vertices()) {
        SpaceClass r = classify_sphere(rim(d, v), ws);
        if (r.tag == SpaceClass::Tag::sphere) {
            out.decomposition.interior.push_back(v);
        } else {
            out.decomposition.boundary.push_back(v);
        }
    }
    out.verdict = is_normal_disk(d, out.decomposition.boundary, ws);
    out.ok = out.verdict.tag == SpaceClass::Tag::disk;
    return out;
}

Graph minimal_sphere(int n) {
    if (n < 0) {
        throw std::invalid_argument("sphere dimension must be non-negative");
    }
    Graph s0 = Graph::build({0, 1}, {});
    Graph out = s0;
    for (int k = 1; k <= n; ++k) out = join(out, s0);
    return out;
}

}  // namespace ndtopo
