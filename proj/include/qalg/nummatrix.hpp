#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <vector>

namespace qalg {

/// Dense complex matrix for the numeric layer (evaluated representations,
/// truncated Fock realizations).
class NumMatrix {
public:
    using C = std::complex<double>;

    NumMatrix() : rows_(0), cols_(0) {}
    NumMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * size_t(cols)) {}

    static NumMatrix identity(int n) {
        NumMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    C& operator()(int i, int j) { return e_[size_t(i) * size_t(cols_) + size_t(j)]; }
    const C& operator()(int i, int j) const { return e_[size_t(i) * size_t(cols_) + size_t(j)]; }

    friend NumMatrix operator+(const NumMatrix& a, const NumMatrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        NumMatrix r = a;
        for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
        return r;
    }
    friend NumMatrix operator-(const NumMatrix& a, const NumMatrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        NumMatrix r = a;
        for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
        return r;
    }
    friend NumMatrix operator*(const NumMatrix& a, const NumMatrix& b) {
        assert(a.cols_ == b.rows_);
        NumMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                C v = a(i, k);
                if (v == C(0.0, 0.0)) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += v * b(k, j);
            }
        return r;
    }
    friend NumMatrix operator*(const C& c, const NumMatrix& m) {
        NumMatrix r = m;
        for (auto& x : r.e_) x *= c;
        return r;
    }

    NumMatrix dagger() const {
        NumMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    static NumMatrix kron(const NumMatrix& a, const NumMatrix& b) {
        NumMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                C v = a(i, j);
                if (v == C(0.0, 0.0)) continue;
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l)
                        r(i * b.rows_ + k, j * b.cols_ + l) = v * b(k, l);
            }
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : e_) m = std::max(m, std::abs(x));
        return m;
    }

    /// Largest |entry| over the given columns.
    double max_abs_on_columns(const std::vector<int>& cols) const {
        double m = 0.0;
        for (int i = 0; i < rows_; ++i)
            for (int j : cols) m = std::max(m, std::abs((*this)(i, j)));
        return m;
    }

private:
    int rows_, cols_;
    std::vector<C> e_;
};

}  // namespace qalg
