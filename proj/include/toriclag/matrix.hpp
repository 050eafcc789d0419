#pragma once

#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "toriclag/rational.hpp"

namespace toriclag {

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative shape");
    }
    RatMatrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        a_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("RatMatrix: ragged init");
            for (long x : row) a_.emplace_back(x);
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }
    const Rat& at(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    RatVec row(int r) const {
        RatVec out(cols_);
        for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
        return out;
    }
    RatVec col(int c) const {
        RatVec out(rows_);
        for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
        return out;
    }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    /// Matrix-vector product A*x.
    RatVec apply(const RatVec& x) const {
        if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("RatMatrix::apply: size mismatch");
        RatVec y(rows_, Rat(0));
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) y[r] += at(r, c) * x[c];
        return y;
    }

    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

inline Rat dot(const RatVec& a, const RatVec& b) {
    assert(a.size() == b.size());
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace toriclag
