#include "ndtopo/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ndtopo {

std::optional<VertexId> IsoMap::image(VertexId v) const {
    auto it = std::lower_bound(
        pairs.begin(), pairs.end(), v,
        [](const std::pair<VertexId, VertexId>& p, VertexId x) {
            return p.first < x;
        });
    if (it == pairs.end() || it->first != v) return std::nullopt;
    return it->second;
}

IsoMap IsoMap::inverse() const {
    IsoMap out;
    out.pairs.reserve(pairs.size());
    for (const auto& [a, b] : pairs) out.pairs.emplace_back(b, a);
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

namespace {

constexpr std::size_t kWordCap = 64;  // adjacency rows fit one machine word

struct Dense {
    std::size_t n = 0;
    std::vector<std::uint64_t> rows;  // adjacency mask per compact index
    std::vector<VertexId> ids;        // compact index -> vertex id
};

Dense to_dense(const Graph& g) {
    Dense d;
    d.ids = g.vertices();
    d.n = d.ids.size();
    d.rows.assign(d.n, 0);
    for (std::size_t i = 0; i < d.n; ++i) {
        for (VertexId w : g.neighbors(d.ids[i])) {
            std::size_t j = static_cast<std::size_t>(
                std::lower_bound(d.ids.begin(), d.ids.end(), w) -
                d.ids.begin());
            d.rows[i] |= std::uint64_t{1} << j;
        }
    }
    return d;
}

void rank_normalize(std::vector<int>& color) {
    std::vector<int> values = color;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int& c : color) {
        c = static_cast<int>(std::lower_bound(values.begin(), values.end(),
                                              c) -
                             values.begin());
    }
}

// Equitable refinement of an ordered partition. Cell order is derived from
// signatures only, so it is invariant under vertex relabeling.
void refine(const Dense& d, std::vector<int>& color, Workspace* ws) {
    const std::size_t n = d.n;
    for (;;) {
        if (ws) ws->charge();
        int k = 0;
        for (int c : color) k = std::max(k, c + 1);
        if (k == static_cast<int>(n)) return;  // discrete
        std::vector<std::uint64_t> cell(k, 0);
        for (std::size_t v = 0; v < n; ++v) {
            cell[color[v]] |= std::uint64_t{1} << v;
        }
        std::vector<std::vector<int>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].reserve(k + 1);
            sig[v].push_back(color[v]);
            for (int c = 0; c < k; ++c) {
                sig[v].push_back(std::popcount(d.rows[v] & cell[c]));
            }
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (sig[a] != sig[b]) return sig[a] < sig[b];
            return a < b;
        });
        std::vector<int> next(n);
        int nc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++nc;
            next[order[i]] = nc;
        }
        if (next == color) return;
        color = std::move(next);
    }
}

std::vector<int> individualize(const std::vector<int>& color,
                               std::size_t target) {
    std::vector<int> out(color.size());
    for (std::size_t v = 0; v < color.size(); ++v) {
        out[v] = 2 * color[v] + (v == target ? 0 : 1);
    }
    rank_normalize(out);
    return out;
}

// True when adjacency depends only on the cell pair: every cell induces a
// clique or an independent set, and every cell pair is complete or empty.
// Then any cell-respecting order yields the same code, so no branching is
// needed.
bool cellwise_determined(const Dense& d, const std::vector<int>& color) {
    int k = 0;
    for (int c : color) k = std::max(k, c + 1);
    std::vector<std::uint64_t> cell(k, 0);
    std::vector<std::vector<int>> members(k);
    for (std::size_t v = 0; v < d.n; ++v) {
        cell[color[v]] |= std::uint64_t{1} << v;
        members[color[v]].push_back(static_cast<int>(v));
    }
    for (int a = 0; a < k; ++a) {
        int v0 = members[a][0];
        std::uint64_t within0 = d.rows[v0] & cell[a];
        bool clique = within0 == (cell[a] ^ (std::uint64_t{1} << v0));
        if (!clique && within0 != 0) return false;
        for (int v : members[a]) {
            std::uint64_t w = d.rows[v] & cell[a];
            if (clique ? w != (cell[a] ^ (std::uint64_t{1} << v)) : w != 0) {
                return false;
            }
        }
        for (int b = 0; b < k; ++b) {
            if (b == a) continue;
            std::uint64_t cross0 = d.rows[v0] & cell[b];
            bool full = cross0 == cell[b];
            if (!full && cross0 != 0) return false;
            for (int v : members[a]) {
                std::uint64_t w = d.rows[v] & cell[b];
                if (full ? w != cell[b] : w != 0) return false;
            }
        }
    }
    return true;
}

struct CanonSearch {
    const Dense& d;
    Workspace* ws;
    std::optional<std::string> best;
    std::vector<int> best_perm;  // canonical position -> compact index

    std::string pack(const std::vector<int>& perm) const {
        std::string code;
        code.push_back(static_cast<char>(d.n));
        unsigned acc = 0;
        int nbits = 0;
        for (std::size_t i = 0; i < d.n; ++i) {
            for (std::size_t j = i + 1; j < d.n; ++j) {
                bool adj = (d.rows[perm[i]] >> perm[j]) & 1u;
                acc = (acc << 1) | (adj ? 1u : 0u);
                if (++nbits == 8) {
                    code.push_back(static_cast<char>(acc));
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if (nbits > 0) code.push_back(static_cast<char>(acc << (8 - nbits)));
        return code;
    }

    void leaf(const std::vector<int>& perm) {
        std::string code = pack(perm);
        if (!best || code < *best) {
            best = std::move(code);
            best_perm = perm;
        }
    }

    void run(std::vector<int> color) {
        refine(d, color, ws);
        if (ws) ws->charge();
        int k = 0;
        for (int c : color) k = std::max(k, c + 1);
        if (k == static_cast<int>(d.n)) {
            std::vector<int> perm(d.n);
            for (std::size_t v = 0; v < d.n; ++v) perm[color[v]] = v;
            leaf(perm);
            return;
        }
        if (cellwise_determined(d, color)) {
            std::vector<int> perm(d.n);
            std::iota(perm.begin(), perm.end(), 0);
            std::stable_sort(perm.begin(), perm.end(),
                             [&](int a, int b) { return color[a] < color[b]; });
            leaf(perm);
            return;
        }
        // branch on the first non-singleton cell
        int target_color = -1;
        std::vector<std::size_t> cell_size(k, 0);
        for (int c : color) ++cell_size[c];
        for (int c = 0; c < k; ++c) {
            if (cell_size[c] > 1) {
                target_color = c;
                break;
            }
        }
        for (std::size_t v = 0; v < d.n; ++v) {
            if (color[v] == target_color) run(individualize(color, v));
        }
    }
};

std::size_t effective_cap(std::size_t cap) { return std::min(cap, kWordCap); }

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::size_t cap, Workspace* ws) {
    const std::size_t n = g.vertex_count();
    if (n > effective_cap(cap)) {
        throw cap_error("graph with " + std::to_string(n) +
                        " vertices exceeds the canonicalization cap of " +
                        std::to_string(effective_cap(cap)));
    }
    CanonicalForm out;
    if (n == 0) {
        out.code = std::string(1, '\0');
        return out;
    }
    Dense d = to_dense(g);
    CanonSearch search{d, ws};
    search.run(std::vector<int>(n, 0));
    out.code = *search.best;
    out.order.reserve(n);
    for (int idx : search.best_perm) out.order.push_back(d.ids[idx]);
    return out;
}

std::string canonical_code(const Graph& g, std::size_t cap, Workspace* ws) {
    return canonical_form(g, cap, ws).code;
}

namespace {

std::vector<std::size_t> degree_multiset(const Graph& g) {
    std::vector<std::size_t> deg;
    deg.reserve(g.vertex_count());
    for (VertexId v : g.vertices()) deg.push_back(g.degree(v));
    std::sort(deg.begin(), deg.end());
    return deg;
}

IsoVerdict refuted(std::string why) {
    IsoVerdict v;
    v.refutation = std::move(why);
    return v;
}

// Plain backtracking used above the canonicalization cap.
bool extend_mapping(const Graph& g, const Graph& h,
                    const std::vector<VertexId>& order, std::size_t pos,
                    std::map<VertexId, VertexId>& fwd,
                    std::map<VertexId, VertexId>& rev, Workspace* ws) {
    if (pos == order.size()) return true;
    if (ws) ws->charge();
    VertexId v = order[pos];
    for (VertexId cand : h.vertices()) {
        if (rev.count(cand)) continue;
        if (h.degree(cand) != g.degree(v)) continue;
        bool ok = true;
        for (VertexId w : g.neighbors(v)) {
            auto it = fwd.find(w);
            if (it != fwd.end() && !h.adjacent(cand, it->second)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            // mapped non-neighbors must stay non-neighbors
            for (const auto& [gw, hw] : fwd) {
                if (!g.adjacent(v, gw) && h.adjacent(cand, hw)) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        fwd[v] = cand;
        rev[cand] = v;
        if (extend_mapping(g, h, order, pos + 1, fwd, rev, ws)) return true;
        fwd.erase(v);
        rev.erase(cand);
    }
    return false;
}

}  // namespace

IsoVerdict isomorphism_check(const Graph& g, const Graph& h,
                             const std::optional<IsoMap>& m, Workspace* ws) {
    if (m) {
        if (m->pairs.size() != g.vertex_count()) {
            return refuted("map size does not match vertex count");
        }
        VertexSet domain, image;
        for (const auto& [a, b] : m->pairs) {
            domain.push_back(a);
            image.push_back(b);
        }
        if (make_vertex_set(domain) != g.vertices()) {
            return refuted("map domain is not the first vertex set");
        }
        if (make_vertex_set(image) != h.vertices()) {
            return refuted("map image is not the second vertex set");
        }
        if (g.edge_count() != h.edge_count()) {
            return refuted("edge counts differ");
        }
        IsoMap sorted = *m;
        std::sort(sorted.pairs.begin(), sorted.pairs.end());
        for (const auto& [u, w] : g.edges()) {
            if (!h.adjacent(*sorted.image(u), *sorted.image(w))) {
                return refuted("edge (" + std::to_string(u) + "," +
                               std::to_string(w) + ") is not preserved");
            }
        }
        IsoVerdict out;
        out.isomorphic = true;
        out.map = std::move(sorted);
        return out;
    }

    if (g.vertex_count() != h.vertex_count()) {
        return refuted("vertex counts differ");
    }
    if (g.edge_count() != h.edge_count()) {
        return refuted("edge counts differ");
    }
    if (degree_multiset(g) != degree_multiset(h)) {
        return refuted("degree multisets differ");
    }

    std::size_t cap = ws ? ws->limits().canonical_cap : 40;
    if (g.vertex_count() <= effective_cap(cap)) {
        CanonicalForm cg = canonical_form(g, cap, ws);
        CanonicalForm ch = canonical_form(h, cap, ws);
        if (cg.code != ch.code) return refuted("canonical codes differ");
        IsoMap map;
        map.pairs.reserve(cg.order.size());
        for (std::size_t i = 0; i < cg.order.size(); ++i) {
            map.pairs.emplace_back(cg.order[i], ch.order[i]);
        }
        std::sort(map.pairs.begin(), map.pairs.end());
        for (const auto& [u, w] : g.edges()) {
            if (!h.adjacent(*map.image(u), *map.image(w))) {
                throw std::logic_error(
                    "canonical labeling produced a non-isomorphism");
            }
        }
        IsoVerdict out;
        out.isomorphic = true;
        out.map = std::move(map);
        return out;
    }

    std::vector<VertexId> order = g.vertices();
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::map<VertexId, VertexId> fwd, rev;
    if (extend_mapping(g, h, order, 0, fwd, rev, ws)) {
        IsoVerdict out;
        out.isomorphic = true;
        out.map.pairs.assign(fwd.begin(), fwd.end());
        return out;
    }
    return refuted("exhaustive search found no isomorphism");
}

}  // namespace ndtopo
