#include "surgery/matrix.hpp"

namespace surgery {

Int det(const int_matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    int_matrix w = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                // Bareiss step: the division is exact by Sylvester's identity.
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

rat_matrix to_rat(const int_matrix& m) {
    rat_matrix r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = m.a[i];
    return r;
}

rat_matrix inverse(const int_matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows;
    rat_matrix w = to_rat(m);
    rat_matrix inv = rat_matrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && w.at(p, k) == 0) ++p;
        if (p == n) throw check_error("matrix is singular");
        if (p != k)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(k, j), w.at(p, j));
                std::swap(inv.at(k, j), inv.at(p, j));
            }
        Rat piv = w.at(k, k);
        for (int j = 0; j < n; ++j) {
            w.at(k, j) /= piv;
            inv.at(k, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || w.at(i, k) == 0) continue;
            Rat f = w.at(i, k);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

int rank(const int_matrix& m) {
    rat_matrix w = to_rat(m);
    int r = 0;
    for (int c = 0; c < w.cols && r < w.rows; ++c) {
        int p = r;
        while (p < w.rows && w.at(p, c) == 0) ++p;
        if (p == w.rows) continue;
        if (p != r)
            for (int j = 0; j < w.cols; ++j) std::swap(w.at(r, j), w.at(p, j));
        for (int i = r + 1; i < w.rows; ++i) {
            if (w.at(i, c) == 0) continue;
            Rat f = w.at(i, c) / w.at(r, c);
            for (int j = c; j < w.cols; ++j) w.at(i, j) -= f * w.at(r, j);
        }
        ++r;
    }
    return r;
}

} // namespace surgery
