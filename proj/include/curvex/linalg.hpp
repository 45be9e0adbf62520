#ifndef CURVEX_LINALG_HPP
#define CURVEX_LINALG_HPP

#include <vector>

#include "curvex/poly.hpp"
#include "curvex/rational.hpp"

namespace curvex {

using PolyMatrix = std::vector<std::vector<Poly>>;
using RatMatrix = std::vector<std::vector<Rat>>;

// Bareiss single-step fraction-free elimination. Every interior division is
// exact in Rat[...]; the matrix is consumed.
Poly det_fraction_free(PolyMatrix m);

struct Rref {
    RatMatrix rows;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

Rref rref(RatMatrix m);

struct LinearSolution {
    bool consistent = false;
    bool unique = false;
    std::size_t rank = 0;
    std::vector<Rat> x;  // particular solution, free variables set to 0
};

// Solves A x = b exactly; A may be rectangular.
LinearSolution solve_linear(const RatMatrix& a, const std::vector<Rat>& b);

}  // namespace curvex

#endif
