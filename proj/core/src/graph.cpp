#include "ndtopo/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace ndtopo {

VertexSet make_vertex_set(std::vector<VertexId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

bool set_contains(const VertexSet& s, VertexId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    return out;
}

struct Graph::Data {
    VertexSet verts;                       // ascending
    std::vector<VertexSet> adj;            // parallel to verts, each ascending
    std::map<VertexId, std::string> labels;
    std::size_t edge_count = 0;
};

namespace {

const std::shared_ptr<const Graph::Data>& empty_data() {
    static const std::shared_ptr<const Graph::Data> d =
        std::make_shared<Graph::Data>();
    return d;
}

std::size_t index_of(const VertexSet& verts, VertexId v) {
    auto it = std::lower_bound(verts.begin(), verts.end(), v);
    if (it == verts.end() || *it != v) {
        throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    }
    return static_cast<std::size_t>(it - verts.begin());
}

}  // namespace

Graph::Graph() : d_(empty_data()) {}
Graph::Graph(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

Graph Graph::build(VertexSet vertices, std::vector<Edge> edges,
                   std::map<VertexId, std::string> labels) {
    auto d = std::make_shared<Data>();
    d->verts = make_vertex_set(std::move(vertices));
    for (auto& e : edges) {
        if (e.first == e.second) {
            throw std::invalid_argument(
                "self-loop at vertex " + std::to_string(e.first) +
                " violates the simple-graph constraint");
        }
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    d->adj.resize(d->verts.size());
    for (const auto& e : edges) {
        std::size_t i = index_of(d->verts, e.first);
        std::size_t j = index_of(d->verts, e.second);
        d->adj[i].push_back(e.second);
        d->adj[j].push_back(e.first);
    }
    for (auto& nbrs : d->adj) std::sort(nbrs.begin(), nbrs.end());
    d->edge_count = edges.size();
    for (const auto& [v, text] : labels) {
        if (!std::binary_search(d->verts.begin(), d->verts.end(), v)) {
            throw std::invalid_argument("label for unknown vertex id " +
                                        std::to_string(v));
        }
        d->labels.emplace(v, text);
    }
    return Graph(std::move(d));
}

std::size_t Graph::vertex_count() const { return d_->verts.size(); }
std::size_t Graph::edge_count() const { return d_->edge_count; }
const VertexSet& Graph::vertices() const { return d_->verts; }

bool Graph::has_vertex(VertexId v) const {
    return std::binary_search(d_->verts.begin(), d_->verts.end(), v);
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    const VertexSet& nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const VertexSet& Graph::neighbors(VertexId v) const {
    return d_->adj[index_of(d_->verts, v)];
}

std::size_t Graph::degree(VertexId v) const { return neighbors(v).size(); }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(d_->edge_count);
    for (std::size_t i = 0; i < d_->verts.size(); ++i) {
        VertexId u = d_->verts[i];
        for (VertexId w : d_->adj[i]) {
            if (u < w) out.emplace_back(u, w);
        }
    }
    return out;
}

const std::map<VertexId, std::string>& Graph::labels() const {
    return d_->labels;
}

std::string Graph::label_or_id(VertexId v) const {
    auto it = d_->labels.find(v);
    if (it != d_->labels.end()) return it->second;
    return std::to_string(v);
}

Graph Graph::with_labels(std::map<VertexId, std::string> labels) const {
    auto d = std::make_shared<Data>(*d_);
    d->labels.clear();
    for (const auto& [v, text] : labels) {
        if (!has_vertex(v)) {
            throw std::invalid_argument("label for unknown vertex id " +
                                        std::to_string(v));
        }
        d->labels.emplace(v, text);
    }
    return Graph(std::move(d));
}

bool Graph::identical(const Graph& other) const {
    return d_->verts == other.d_->verts && d_->adj == other.d_->adj &&
           d_->labels == other.d_->labels;
}

namespace {

std::map<VertexId, std::string> restrict_labels(
    const std::map<VertexId, std::string>& labels, const VertexSet& keep) {
    std::map<VertexId, std::string> out;
    for (const auto& [v, text] : labels) {
        if (set_contains(keep, v)) out.emplace(v, text);
    }
    return out;
}

}  // namespace

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<Edge> edges;
    for (VertexId v : s) {
        for (VertexId w : g.neighbors(v)) {  // validates membership in g
            if (v < w && set_contains(s, w)) edges.emplace_back(v, w);
        }
    }
    return Graph::build(s, std::move(edges), restrict_labels(g.labels(), s));
}

Graph rim(const Graph& g, VertexId v) {
    return induced_subgraph(g, g.neighbors(v));
}

Graph ball(const Graph& g, VertexId v) {
    return induced_subgraph(g, set_union(g.neighbors(v), VertexSet{v}));
}

Graph mutual_rim(const Graph& g, const VertexSet& h) {
    if (h.empty()) {
        throw std::invalid_argument("mutual_rim of an empty vertex set");
    }
    VertexSet common = g.neighbors(h[0]);
    for (std::size_t i = 1; i < h.size() && !common.empty(); ++i) {
        common = set_intersection(common, g.neighbors(h[i]));
    }
    return induced_subgraph(g, common);
}

Graph join(const Graph& g, const Graph& h) {
    VertexId shift = g.empty() ? 0 : g.vertices().back() + 1;
    std::map<VertexId, VertexId> mapping;
    for (VertexId v : h.vertices()) mapping[v] = v + shift;
    Graph hs = relabel(h, mapping);

    VertexSet verts = set_union(g.vertices(), hs.vertices());
    std::vector<Edge> edges = g.edges();
    auto hedges = hs.edges();
    edges.insert(edges.end(), hedges.begin(), hedges.end());
    for (VertexId a : g.vertices()) {
        for (VertexId b : hs.vertices()) edges.emplace_back(a, b);
    }
    std::map<VertexId, std::string> labels = g.labels();
    for (const auto& [v, text] : hs.labels()) labels.emplace(v, text);
    return Graph::build(std::move(verts), std::move(edges), std::move(labels));
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (VertexId start : g.vertices()) {
        if (set_contains(seen, start)) continue;
        VertexSet comp{start};
        std::vector<VertexId> queue{start};
        while (!queue.empty()) {
            VertexId v = queue.back();
            queue.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (!set_contains(comp, w)) {
                    comp.insert(
                        std::lower_bound(comp.begin(), comp.end(), w), w);
                    queue.push_back(w);
                }
            }
        }
        seen = set_union(seen, comp);
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return g.vertex_count() == 1;
    return connected_components(g).size() == 1;
}

Graph quotient_identify(const Graph& g,
                        const std::vector<VertexSet>& classes) {
    std::map<VertexId, VertexId> rep;  // member -> class representative
    for (const auto& cls : classes) {
        if (cls.empty()) continue;
        VertexId r = cls.front();
        for (VertexId v : cls) {
            if (!g.has_vertex(v)) {
                throw std::invalid_argument(
                    "quotient class member " + std::to_string(v) +
                    " is not a vertex");
            }
            if (!rep.emplace(v, r).second) {
                throw std::invalid_argument(
                    "quotient classes overlap at vertex " + std::to_string(v));
            }
        }
    }
    auto image = [&](VertexId v) {
        auto it = rep.find(v);
        return it == rep.end() ? v : it->second;
    };
    VertexSet verts;
    for (VertexId v : g.vertices()) verts.push_back(image(v));
    std::vector<Edge> edges;
    for (const auto& [u, w] : g.edges()) {
        VertexId a = image(u), b = image(w);
        if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    verts = make_vertex_set(std::move(verts));
    return Graph::build(verts, std::move(edges),
                        restrict_labels(g.labels(), verts));
}

Graph without_vertex(const Graph& g, VertexId v) {
    if (!g.has_vertex(v)) {
        throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    }
    return induced_subgraph(g, set_difference(g.vertices(), VertexSet{v}));
}

Graph with_vertex(const Graph& g, VertexId v, const VertexSet& neighbors) {
    if (g.has_vertex(v)) {
        throw std::invalid_argument("vertex id " + std::to_string(v) +
                                    " already present");
    }
    std::vector<Edge> edges = g.edges();
    for (VertexId w : neighbors) {
        if (!g.has_vertex(w)) {
            throw std::invalid_argument("attachment rim vertex " +
                                        std::to_string(w) + " not present");
        }
        edges.emplace_back(std::min(v, w), std::max(v, w));
    }
    return Graph::build(set_union(g.vertices(), VertexSet{v}),
                        std::move(edges), g.labels());
}

Graph without_edge(const Graph& g, VertexId u, VertexId v) {
    if (!g.adjacent(u, v)) {
        throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") not present");
    }
    Edge target{std::min(u, v), std::max(u, v)};
    std::vector<Edge> edges = g.edges();
    edges.erase(std::remove(edges.begin(), edges.end(), target), edges.end());
    return Graph::build(g.vertices(), std::move(edges), g.labels());
}

Graph with_edge(const Graph& g, VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("self-loop attachment");
    if (g.adjacent(u, v)) {
        throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") already present");
    }
    std::vector<Edge> edges = g.edges();
    edges.emplace_back(std::min(u, v), std::max(u, v));
    return Graph::build(g.vertices(), std::move(edges), g.labels());
}

Graph relabel(const Graph& g, const std::map<VertexId, VertexId>& mapping) {
    auto image = [&](VertexId v) {
        auto it = mapping.find(v);
        if (it == mapping.end()) {
            throw std::invalid_argument("relabel map misses vertex " +
                                        std::to_string(v));
        }
        return it->second;
    };
    VertexSet verts;
    for (VertexId v : g.vertices()) verts.push_back(image(v));
    VertexSet sorted = make_vertex_set(verts);
    if (sorted.size() != verts.size()) {
        throw std::invalid_argument("relabel map is not injective");
    }
    std::vector<Edge> edges;
    for (const auto& [u, w] : g.edges()) {
        VertexId a = image(u), b = image(w);
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::map<VertexId, std::string> labels;
    for (const auto& [v, text] : g.labels()) labels.emplace(image(v), text);
    return Graph::build(std::move(sorted), std::move(edges),
                        std::move(labels));
}

std::string graph_hash(const Graph& g) {
    std::string s = "V:";
    for (VertexId v : g.vertices()) {
        s += std::to_string(v);
        s += ',';
    }
    s += ";E:";
    for (const auto& [u, w] : g.edges()) {
        s += std::to_string(u);
        s += '-';
        s += std::to_string(w);
        s += ',';
    }
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace ndtopo
