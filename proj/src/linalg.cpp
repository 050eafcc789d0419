#include "toriclag/linalg.hpp"

#include <stdexcept>

namespace toriclag {

std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int r = row; r < m.rows(); ++r) {
            if (m.at(r, col) != 0) {
                p = r;
                break;
            }
        }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
        Rat inv = 1 / m.at(row, col);
        for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rat f = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(const RatMatrix& m) {
    RatMatrix copy = m;
    return static_cast<int>(rref(copy).size());
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    RatMatrix a = m;
    int n = a.rows();
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (p < n && a.at(p, col) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != col) {
            for (int c = col; c < n; ++c) std::swap(a.at(p, c), a.at(col, c));
            det = -det;
        }
        det *= a.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (a.at(r, col) == 0) continue;
            Rat f = a.at(r, col) / a.at(col, col);
            for (int c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
        }
    }
    return det;
}

std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve_linear: size mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    RatVec x(a.cols(), Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), a.cols());
    return x;
}

std::vector<RatVec> rational_kernel_basis(const RatMatrix& a) {
    RatMatrix r = a;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVec v(a.cols(), Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace toriclag
