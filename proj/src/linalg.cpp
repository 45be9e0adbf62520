#include "curvex/linalg.hpp"

#include <stdexcept>

namespace curvex {

Poly det_fraction_free(PolyMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det: matrix not square");
    if (n == 0) return Poly(Rat(1));

    int sign = 1;
    Poly prev(Rat(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly();  // whole lower column zero: singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                auto q = Poly::divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
                if (!q) throw std::logic_error("Bareiss: inexact interior division");
                m[i][j] = std::move(*q);
            }
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Rref rref(RatMatrix m) {
    Rref out;
    if (m.empty()) return out;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("rref: ragged matrix");

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rows = std::move(m);
    return out;
}

LinearSolution solve_linear(const RatMatrix& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
    LinearSolution sol;
    if (a.empty()) {
        sol.consistent = true;
        sol.unique = true;
        return sol;
    }
    const std::size_t cols = a[0].size();
    RatMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Rref rr = rref(std::move(aug));
    for (std::size_t c : rr.pivot_cols)
        if (c == cols) return sol;  // pivot in augmented column: inconsistent
    sol.consistent = true;
    sol.unique = rr.rank() == cols;
    sol.rank = rr.rank();
    sol.x.assign(cols, Rat(0));
    for (std::size_t i = 0; i < rr.rank(); ++i) sol.x[rr.pivot_cols[i]] = rr.rows[i][cols];
    return sol;
}

}  // namespace curvex
