#ifndef SOLVIR_LINALG_HPP
#define SOLVIR_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "scalar.hpp"

namespace solvir {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Reduced row echelon form over Q in place; returns the pivot columns.
inline std::vector<std::size_t> rref(Matrix<BigRational>& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c].is_zero())
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[row], m[p]);
        const BigRational inv = m[row][c].inverse();
        for (auto& v : m[row])
            v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][c].is_zero())
                continue;
            const BigRational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!m[row][j].is_zero())
                    m[i][j] -= f * m[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(Matrix<BigRational> m) { return rref(m).size(); }

/// Basis of the right kernel {x : m x = 0} of a matrix with `cols` columns.
inline std::vector<std::vector<BigRational>> kernel(Matrix<BigRational> m, std::size_t cols)
{
    for (const auto& r : m)
        if (r.size() != cols)
            throw Error(ErrorKind::Unsupported, "ragged matrix");
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<BigRational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<BigRational> v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Rank over the field of fractions of the Scalar ring.
///
/// Rows are first scaled to polynomial entries (clearing the content and
/// the denominator forms), then reduced by fraction-free Bareiss
/// elimination; every division by the previous pivot is exact.
inline std::size_t rank(const Matrix<Scalar>& input)
{
    Matrix<Polynomial> m;
    m.reserve(input.size());
    for (const auto& row : input) {
        // least common denominator of the row
        mpz_class content = 1;
        std::map<LinearForm, int> forms;
        for (const auto& x : row) {
            if (x.is_zero() || x.is_polynomial())
                continue;
            content = lcm(content, x.denominator_content().numerator());
            for (const auto& [f, k] : x.denominator_forms()) {
                int& slot = forms[f];
                slot = std::max(slot, k);
            }
        }
        Polynomial den = Polynomial(BigRational(content));
        for (const auto& [f, k] : forms)
            den = den * f.polynomial().pow(k);
        const Scalar scale(den);
        std::vector<Polynomial> out;
        out.reserve(row.size());
        for (const auto& x : row) {
            const Scalar y = x * scale;
            if (!y.is_polynomial())
                throw Error(ErrorKind::Unsupported, "row scaling left a denominator");
            out.push_back(y.numerator());
        }
        m.push_back(std::move(out));
    }
    if (m.empty())
        return 0;
    const std::size_t cols = m.front().size();
    Polynomial prev(1);
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        // pivot on the sparsest nonzero entry
        std::size_t p = m.size();
        for (std::size_t i = row; i < m.size(); ++i)
            if (!m[i][c].is_zero() && (p == m.size() || m[i][c].size() < m[p][c].size()))
                p = i;
        if (p == m.size())
            continue;
        std::swap(m[row], m[p]);
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Polynomial v = m[row][c] * m[i][j] - m[i][c] * m[row][j];
                auto q = Polynomial::divide_exact(v, prev);
                if (!q)
                    throw Error(ErrorKind::Unsupported, "Bareiss step was not exact");
                m[i][j] = std::move(*q);
            }
            m[i][c] = Polynomial();
        }
        prev = m[row][c];
        ++row;
    }
    return row;
}

} // namespace solvir

#endif
