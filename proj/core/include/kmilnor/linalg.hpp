#ifndef KMILNOR_LINALG_HPP
#define KMILNOR_LINALG_HPP

#include <optional>
#include <vector>

#include "kmilnor/error.hpp"

namespace kmil {

// Dense matrix over a coefficient ring C (row-major).
template <class C>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<C> a;

    Mat() = default;
    Mat(int r, int c, const C& zero) : rows(r), cols(c), a(static_cast<size_t>(r) * c, zero) {}
    C& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const C& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

namespace detail {

template <class C>
int pivot_weight(const C& c)
{
    if constexpr (requires { c.num.deg(); }) {
        return c.num.deg() + c.den.deg();
    } else {
        return 0;
    }
}

// Row echelon form over a field-like C; returns pivot columns.
template <class C>
std::vector<int> echelon(Mat<C>& M, int ncols_pivot)
{
    std::vector<int> piv;
    int r = 0;
    for (int col = 0; col < ncols_pivot && r < M.rows; ++col) {
        int best = -1, bw = 0;
        for (int i = r; i < M.rows; ++i) {
            if (M.at(i, col).is_zero()) continue;
            int w = pivot_weight(M.at(i, col));
            if (best < 0 || w < bw) {
                best = i;
                bw = w;
            }
        }
        if (best < 0) continue;
        if (best != r)
            for (int j = 0; j < M.cols; ++j) std::swap(M.at(r, j), M.at(best, j));
        C inv = M.at(r, col).inv();
        for (int j = col; j < M.cols; ++j) M.at(r, j) = M.at(r, j) * inv;
        for (int i = 0; i < M.rows; ++i) {
            if (i == r || M.at(i, col).is_zero()) continue;
            C f = M.at(i, col);
            for (int j = col; j < M.cols; ++j)
                if (!M.at(r, j).is_zero()) M.at(i, j) = M.at(i, j) - f * M.at(r, j);
        }
        piv.push_back(col);
        ++r;
    }
    return piv;
}

} // namespace detail

template <class C>
int rank(Mat<C> M)
{
    return static_cast<int>(detail::echelon(M, M.cols).size());
}

// Solves M v = b; returns a solution (free variables set to zero) or nullopt.
template <class C>
std::optional<std::vector<C>> solve(const Mat<C>& M, const std::vector<C>& b, const C& zero)
{
    Mat<C> A(M.rows, M.cols + 1, zero);
    for (int i = 0; i < M.rows; ++i) {
        for (int j = 0; j < M.cols; ++j) A.at(i, j) = M.at(i, j);
        A.at(i, M.cols) = b[i];
    }
    auto piv = detail::echelon(A, M.cols);
    for (int i = static_cast<int>(piv.size()); i < A.rows; ++i)
        if (!A.at(i, M.cols).is_zero()) return std::nullopt;
    std::vector<C> v(M.cols, zero);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = A.at(static_cast<int>(r), M.cols);
    return v;
}

// Coefficients c_0..c_n (c_n = 1) of det(T*I - M), division-free (Berkowitz).
template <class C>
std::vector<C> charpoly(const Mat<C>& M, const C& zero)
{
    int n = M.rows;
    const C one = zero.one_like();
    // vect holds coefficients from the leading one downwards
    std::vector<C> vect{one};
    for (int r = 0; r < n; ++r) {
        // column t_0..t_{r+1} of the Toeplitz matrix for the (r+1)x(r+1) leading block
        std::vector<C> tcol(r + 2, zero);
        tcol[0] = one;
        tcol[1] = -M.at(r, r);
        if (r > 0) {
            // w = S^{k} * Ccol, R * w
            std::vector<C> w(r, zero);
            for (int i = 0; i < r; ++i) w[i] = M.at(i, r);
            for (int k = 2; k <= r + 1; ++k) {
                C s = zero;
                for (int j = 0; j < r; ++j)
                    if (!w[j].is_zero()) s = s + M.at(r, j) * w[j];
                tcol[k] = -s;
                if (k == r + 1) break;
                std::vector<C> nw(r, zero);
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j)
                        if (!w[j].is_zero()) nw[i] = nw[i] + M.at(i, j) * w[j];
                w = std::move(nw);
            }
        }
        std::vector<C> nv(r + 2, zero);
        for (int i = 0; i < r + 2; ++i)
            for (int j = 0; j <= i && j < static_cast<int>(vect.size()); ++j)
                if (!tcol[i - j].is_zero() && !vect[j].is_zero()) nv[i] = nv[i] + tcol[i - j] * vect[j];
        vect = std::move(nv);
    }
    // vect[0] = 1 is the leading coefficient; reverse to ascending order
    std::vector<C> out(vect.rbegin(), vect.rend());
    return out;
}

template <class C>
C det(const Mat<C>& M, const C& zero)
{
    auto cp = charpoly(M, zero);
    return (M.rows % 2 == 0) ? cp[0] : -cp[0];
}

} // namespace kmil

#endif
