#include "khovlab/lp.hpp"

#include <stdexcept>

namespace khovlab {

// Dense tableau for
//     min sum(artificials)  s.t.  [A | I] [y; a] = b,  y, a >= 0
// starting from the all-artificial basis. Feasibility of A y = b, y >= 0 is
// equivalent to optimum 0. Bland's rule (lowest eligible index enters, lowest
// basis variable leaves on ties) guarantees termination.
bool lp_equality_feasible(const std::vector<std::vector<Rational>> &matrix,
                          const std::vector<Rational> &rhs) {
    const std::size_t rows = matrix.size();
    if (rhs.size() != rows)
        throw std::invalid_argument("lp: rhs length mismatch");
    const std::size_t nvars = rows == 0 ? 0 : matrix[0].size();
    for (const auto &row : matrix)
        if (row.size() != nvars)
            throw std::invalid_argument("lp: ragged matrix");
    if (rows == 0)
        return true;

    const std::size_t ncols = nvars + rows; // structurals then artificials
    std::vector<std::vector<Rational>> t(rows,
                                         std::vector<Rational>(ncols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        const bool flip = rhs[i] < 0;
        for (std::size_t j = 0; j < nvars; ++j)
            t[i][j] = flip ? Rational(-matrix[i][j]) : matrix[i][j];
        t[i][nvars + i] = 1;
        t[i][ncols] = flip ? Rational(-rhs[i]) : rhs[i];
    }

    // Reduced-cost row for the phase-1 objective; artificial columns start
    // at reduced cost 0, structural ones at minus their column sum.
    std::vector<Rational> obj(ncols + 1);
    for (std::size_t j = 0; j <= ncols; ++j) {
        Rational s(0);
        for (std::size_t i = 0; i < rows; ++i)
            s += t[i][j];
        obj[j] = -s;
    }
    for (std::size_t i = 0; i < rows; ++i)
        obj[nvars + i] = 0;

    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i)
        basis[i] = nvars + i;

    for (;;) {
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < ncols; ++j) {
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == ncols)
            break; // optimal

        std::size_t leave = rows;
        Rational best_ratio;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0)
                continue;
            Rational ratio = t[i][ncols] / t[i][enter];
            if (leave == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        // The phase-1 objective is bounded below by 0, so a descending
        // direction always hits a blocking row.
        if (leave == rows)
            throw std::logic_error("lp: unbounded phase-1 descent");

        const Rational pivot = t[leave][enter];
        for (std::size_t j = 0; j <= ncols; ++j)
            t[leave][j] /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0)
                continue;
            const Rational factor = t[i][enter];
            for (std::size_t j = 0; j <= ncols; ++j)
                t[i][j] -= factor * t[leave][j];
        }
        if (obj[enter] != 0) {
            const Rational factor = obj[enter];
            for (std::size_t j = 0; j <= ncols; ++j)
                obj[j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
    }

    // Optimum value is -obj[rhs]; feasible iff all artificials were driven
    // to zero.
    return obj[ncols] == 0;
}

} // namespace khovlab
