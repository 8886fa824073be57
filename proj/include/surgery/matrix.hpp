#pragma once

#include "surgery/numeric.hpp"

#include <vector>

namespace surgery {

// Small dense matrices over Int / Rat. The library only ever needs exact
// determinants, inverses and ranks of modest symmetric matrices (plumbing
// chains, Gram matrices, Sp(2g,Z) words), so the routines below favour
// clarity over asymptotics.
template <typename T>
struct matrix {
    int rows = 0, cols = 0;
    std::vector<T> a;   // row-major

    matrix() = default;
    matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const matrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    static matrix identity(int n) {
        matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

using int_matrix = matrix<Int>;
using rat_matrix = matrix<Rat>;

template <typename T>
matrix<T> mul(const matrix<T>& x, const matrix<T>& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
    matrix<T> r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const T& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

// Bareiss fraction-free elimination: every intermediate value is an integer
// and the final pivot is the determinant. O(n^3) with single-division steps.
Int det(const int_matrix& m);

rat_matrix to_rat(const int_matrix& m);

// Exact Gauss-Jordan. Throws check_error on a singular input.
rat_matrix inverse(const int_matrix& m);

int rank(const int_matrix& m);

} // namespace surgery
