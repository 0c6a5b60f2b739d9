#ifndef NDTOPO_INVARIANTS_HPP
#define NDTOPO_INVARIANTS_HPP

#include <cstdint>
#include <vector>

#include "ndtopo/graph.hpp"
#include "ndtopo/workspace.hpp"

namespace ndtopo {

struct CliqueTally {
    // counts[k-1] = number of k-vertex cliques; counts[0] = |V|.
    std::vector<std::uint64_t> counts;

    long long euler() const;  // alternating sum over the flag complex
};

// Exact counts by ordered extension (least-id pivot first). max_size == 0
// means unbounded. Charges the clique budget per clique.
CliqueTally enumerate_cliques(const Graph& g, Workspace& ws,
                              std::size_t max_size = 0);

long long euler_characteristic(const Graph& g, Workspace& ws);

enum class Coefficients { integers, mod2 };

struct HomologySummary {
    long long euler = 0;
    std::vector<std::size_t> betti;  // through the flag-complex dimension
    std::vector<bool> torsion;       // torsion present in H_k (integers only)
};

// Homology of the flag (clique) complex. Integer coefficients go through
// an exact Smith normal form with arbitrary-precision arithmetic; mod-2
// uses GF(2) ranks and reports no torsion flags.
HomologySummary betti_numbers(const Graph& g, Workspace& ws,
                              Coefficients coeff = Coefficients::integers);

}  // namespace ndtopo

#endif
