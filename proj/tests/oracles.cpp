#include "oracles.hpp"

#include <bit>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "ndtopo/canonical.hpp"

namespace oracles {

Graph octahedron() {
    std::vector<ndtopo::Edge> edges;
    for (VertexId u = 0; u < 6; ++u) {
        for (VertexId v = u + 1; v < 6; ++v) {
            if (v != u + 3) edges.emplace_back(u, v);
        }
    }
    return Graph::build({0, 1, 2, 3, 4, 5}, std::move(edges));
}

Graph wheel5() {
    return Graph::build({0, 1, 2, 3, 4},
                        {{0, 1}, {1, 2}, {2, 3}, {0, 3},
                         {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

Graph cycle(int n) {
    VertexSet verts;
    std::vector<ndtopo::Edge> edges;
    for (int i = 0; i < n; ++i) {
        verts.push_back(static_cast<VertexId>(i));
        if (n >= 2) {
            VertexId a = static_cast<VertexId>(i);
            VertexId b = static_cast<VertexId>((i + 1) % n);
            if (a < b) edges.emplace_back(a, b);
        }
    }
    return Graph::build(std::move(verts), std::move(edges));
}

Graph path(int n) {
    VertexSet verts;
    std::vector<ndtopo::Edge> edges;
    for (int i = 0; i < n; ++i) {
        verts.push_back(static_cast<VertexId>(i));
        if (i + 1 < n) {
            edges.emplace_back(static_cast<VertexId>(i),
                               static_cast<VertexId>(i + 1));
        }
    }
    return Graph::build(std::move(verts), std::move(edges));
}

bool exhaustive_contractible(const Graph& g) {
    const VertexSet& ids = g.vertices();
    const std::size_t n = ids.size();
    if (n == 0) return false;
    if (n > 25) throw std::invalid_argument("oracle capped at 25 vertices");
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (VertexId w : g.neighbors(ids[i])) {
            std::size_t j = static_cast<std::size_t>(
                std::lower_bound(ids.begin(), ids.end(), w) - ids.begin());
            adj[i] |= std::uint32_t{1} << j;
        }
    }
    std::unordered_map<std::uint32_t, bool> memo;
    std::function<bool(std::uint32_t)> reducible =
        [&](std::uint32_t mask) -> bool {
        int pc = std::popcount(mask);
        if (pc == 0) return false;
        if (pc == 1) return true;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (std::uint32_t rest = mask; rest && !ok; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            std::uint32_t rim_mask = adj[v] & mask;
            if (reducible(rim_mask) &&
                reducible(mask & ~(std::uint32_t{1} << v))) {
                ok = true;
            }
        }
        memo.emplace(mask, ok);
        return ok;
    };
    std::uint32_t full = n == 32 ? ~std::uint32_t{0}
                                 : (std::uint32_t{1} << n) - 1;
    return reducible(full);
}

std::vector<std::uint64_t> brute_clique_counts(const Graph& g) {
    const VertexSet& ids = g.vertices();
    const std::size_t n = ids.size();
    if (n > 20) throw std::invalid_argument("oracle capped at 20 vertices");
    std::vector<std::uint64_t> counts;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        bool clique = true;
        for (std::uint32_t m1 = mask; m1 && clique; m1 &= m1 - 1) {
            int i = std::countr_zero(m1);
            for (std::uint32_t m2 = m1 & (m1 - 1); m2 && clique;
                 m2 &= m2 - 1) {
                int j = std::countr_zero(m2);
                if (!g.adjacent(ids[i], ids[j])) clique = false;
            }
        }
        if (!clique) continue;
        std::size_t k = static_cast<std::size_t>(std::popcount(mask));
        if (counts.size() < k) counts.resize(k, 0);
        ++counts[k - 1];
    }
    return counts;
}

namespace {

bool zn_adjacent_oracle(const std::vector<int>& x, const std::vector<int>& y) {
    bool equal = true, le = true, ge = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::abs(x[i] - y[i]) > 1) return false;
        if (x[i] != y[i]) equal = false;
        int px = ((x[i] % 2) + 2) % 2;
        int py = ((y[i] % 2) + 2) % 2;
        if (px > py) le = false;
        if (px < py) ge = false;
    }
    return !equal && (le || ge);
}

}  // namespace

std::vector<std::vector<std::size_t>> zn_flood_components(
    const std::vector<std::vector<int>>& points) {
    const std::size_t n = points.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> comps;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> comp, queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            std::size_t v = queue.back();
            queue.pop_back();
            comp.push_back(v);
            for (std::size_t w = 0; w < n; ++w) {
                if (!seen[w] && zn_adjacent_oracle(points[v], points[w])) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::size_t rational_rank(std::vector<std::vector<long long>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<__int128>> a(rows,
                                         std::vector<__int128>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
    }
    __int128 prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) /
                          prev;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<Graph> connected_classes(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("supported sizes: 1..7");
    std::vector<Graph> cur{Graph::build({0}, {})};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> next;  // ordered: deterministic output
        for (const Graph& g : cur) {
            const VertexSet& vs = g.vertices();
            VertexId fresh = static_cast<VertexId>(size - 1);
            for (std::uint32_t sub = 1;
                 sub < (std::uint32_t{1} << (size - 1)); ++sub) {
                VertexSet nbrs;
                for (std::uint32_t m = sub; m; m &= m - 1) {
                    nbrs.push_back(vs[std::countr_zero(m)]);
                }
                Graph h = ndtopo::with_vertex(g, fresh, nbrs);
                next.emplace(ndtopo::canonical_code(h), h);
            }
        }
        cur.clear();
        for (auto& [code, g] : next) cur.push_back(std::move(g));
    }
    return cur;
}

}  // namespace oracles
