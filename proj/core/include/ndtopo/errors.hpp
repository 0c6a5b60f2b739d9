#ifndef NDTOPO_ERRORS_HPP
#define NDTOPO_ERRORS_HPP

#include <stdexcept>

namespace ndtopo {

// A configured work cap ran out (step budget, clique budget, window cap).
// The CLI maps this to exit code 4.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph exceeds the exact-canonicalization cap; callers fall back to
// uncached evaluation.
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed external input (graph files, window specs, labels).
// The CLI maps this to exit code 2.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ndtopo

#endif
