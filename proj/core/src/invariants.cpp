#include "ndtopo/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

namespace ndtopo {

using Int = boost::multiprecision::cpp_int;

long long CliqueTally::euler() const {
    long long chi = 0;
    int sign = 1;
    for (std::uint64_t c : counts) {
        chi += sign * static_cast<long long>(c);
        sign = -sign;
    }
    return chi;
}

namespace {

// Visits every clique exactly once, in lexicographic vertex order.
void visit_cliques(
    const Graph& g, std::size_t max_size, Workspace& ws,
    const std::function<void(const std::vector<VertexId>&)>& sink) {
    std::vector<VertexId> current;
    std::function<void(const VertexSet&)> extend =
        [&](const VertexSet& cands) {
            for (VertexId v : cands) {
                current.push_back(v);
                ws.charge_clique();
                sink(current);
                if (max_size == 0 || current.size() < max_size) {
                    VertexSet next;
                    for (VertexId w :
                         set_intersection(cands, g.neighbors(v))) {
                        if (w > v) next.push_back(w);
                    }
                    if (!next.empty()) extend(next);
                }
                current.pop_back();
            }
        };
    extend(g.vertices());
}

struct FlagComplex {
    // simplices[k] = sorted vertex lists of the k-dimensional simplices
    std::vector<std::vector<std::vector<VertexId>>> simplices;
};

FlagComplex build_flag_complex(const Graph& g, Workspace& ws) {
    FlagComplex fc;
    visit_cliques(g, 0, ws, [&](const std::vector<VertexId>& clique) {
        std::size_t dim = clique.size() - 1;
        if (fc.simplices.size() <= dim) fc.simplices.resize(dim + 1);
        fc.simplices[dim].push_back(clique);
    });
    // visit order is lexicographic already; keep it for index stability
    return fc;
}

// Signed boundary matrix of dimension k (k >= 1): rows index the
// (k-1)-simplices, columns the k-simplices.
std::vector<std::vector<Int>> boundary_matrix(const FlagComplex& fc,
                                              std::size_t k) {
    const auto& rows_list = fc.simplices[k - 1];
    const auto& cols_list = fc.simplices[k];
    std::map<std::vector<VertexId>, std::size_t> row_index;
    for (std::size_t i = 0; i < rows_list.size(); ++i) {
        row_index.emplace(rows_list[i], i);
    }
    std::vector<std::vector<Int>> m(rows_list.size(),
                                    std::vector<Int>(cols_list.size(), 0));
    for (std::size_t j = 0; j < cols_list.size(); ++j) {
        const auto& simplex = cols_list[j];
        int sign = 1;
        for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
            std::vector<VertexId> face;
            face.reserve(simplex.size() - 1);
            for (std::size_t i = 0; i < simplex.size(); ++i) {
                if (i != drop) face.push_back(simplex[i]);
            }
            m[row_index.at(face)][j] = sign;
            sign = -sign;
        }
    }
    return m;
}

struct SnfResult {
    std::size_t rank = 0;
    std::vector<Int> divisors;  // absolute values of the nonzero diagonal
};

SnfResult smith_normal_form(std::vector<std::vector<Int>> m) {
    SnfResult out;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest absolute nonzero value in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                if (!found || abs(m[i][j]) < abs(m[pi][pj])) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        }
        if (!found) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        for (;;) {
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (m[i][t] == 0) continue;
                    Int q = m[i][t] / m[t][t];
                    for (std::size_t j = t; j < cols; ++j) {
                        m[i][j] -= q * m[t][j];
                    }
                    if (m[i][t] != 0) {  // remainder beats the pivot
                        std::swap(m[t], m[i]);
                        dirty = true;
                    }
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (m[t][j] == 0) continue;
                    Int q = m[t][j] / m[t][t];
                    for (std::size_t i = t; i < rows; ++i) {
                        m[i][j] -= q * m[i][t];
                    }
                    if (m[t][j] != 0) {
                        for (std::size_t i = 0; i < rows; ++i) {
                            std::swap(m[i][t], m[i][j]);
                        }
                        dirty = true;
                    }
                }
            }
            // pivot must divide the rest of the trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t jj = t; jj < cols; ++jj) {
                            m[t][jj] += m[i][jj];
                        }
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        out.divisors.push_back(abs(m[t][t]));
        ++t;
    }
    out.rank = out.divisors.size();
    return out;
}

std::size_t gf2_rank(const std::vector<std::vector<Int>>& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> bits(
        rows, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (m[i][j] % 2 != 0) {
                bits[i][j / 64] |= std::uint64_t{1} << (j % 64);
            }
        }
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows &&
               !((bits[pivot][col / 64] >> (col % 64)) & 1u)) {
            ++pivot;
        }
        if (pivot == rows) continue;
        std::swap(bits[rank], bits[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != rank && ((bits[i][col / 64] >> (col % 64)) & 1u)) {
                for (std::size_t w = 0; w < words; ++w) {
                    bits[i][w] ^= bits[rank][w];
                }
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

CliqueTally enumerate_cliques(const Graph& g, Workspace& ws,
                              std::size_t max_size) {
    CliqueTally tally;
    visit_cliques(g, max_size, ws, [&](const std::vector<VertexId>& clique) {
        if (tally.counts.size() < clique.size()) {
            tally.counts.resize(clique.size(), 0);
        }
        ++tally.counts[clique.size() - 1];
    });
    return tally;
}

long long euler_characteristic(const Graph& g, Workspace& ws) {
    return enumerate_cliques(g, ws).euler();
}

HomologySummary betti_numbers(const Graph& g, Workspace& ws,
                              Coefficients coeff) {
    HomologySummary summary;
    if (g.empty()) return summary;
    FlagComplex fc = build_flag_complex(g, ws);
    const std::size_t dims = fc.simplices.size();

    std::vector<std::size_t> rank(dims + 1, 0);  // rank[k] = rank of d_k
    std::vector<bool> torsion(dims, false);
    for (std::size_t k = 1; k < dims; ++k) {
        auto m = boundary_matrix(fc, k);
        if (coeff == Coefficients::integers) {
            SnfResult snf = smith_normal_form(std::move(m));
            rank[k] = snf.rank;
            for (const Int& d : snf.divisors) {
                if (d > 1) torsion[k - 1] = true;
            }
        } else {
            rank[k] = gf2_rank(m);
        }
    }

    summary.betti.resize(dims);
    long long chi = 0;
    int sign = 1;
    for (std::size_t k = 0; k < dims; ++k) {
        std::size_t n_k = fc.simplices[k].size();
        summary.betti[k] = n_k - rank[k] - rank[k + 1];
        chi += sign * static_cast<long long>(n_k);
        sign = -sign;
    }
    summary.euler = chi;
    summary.torsion = std::move(torsion);
    return summary;
}

}  // namespace ndtopo
