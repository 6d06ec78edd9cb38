#pragma once

#include <cstddef>
#include <vector>

#include "syzlab/polynomial.hpp"

namespace syzlab {

// Dense matrix of sparse polynomials. Row/column counts may be zero; the
// empty matrix of any shape is a valid map between free modules.
class PolyMatrix {
public:
    PolyMatrix() = default;

    PolyMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols)
    {
    }

    static PolyMatrix identity(std::size_t n, std::size_t nvars)
    {
        PolyMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(1, nvars);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Polynomial& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Polynomial& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const PolyMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    // No entry with a nonzero constant term; this is the minimality criterion
    // for presentation and differential matrices.
    bool is_minimal() const
    {
        for (const auto& p : e_)
            if (p.constant_term() != 0) return false;
        return true;
    }

    bool is_zero() const
    {
        for (const auto& p : e_)
            if (!p.is_zero()) return false;
        return true;
    }

    friend PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b, const PrimeField& F)
    {
        if (a.cols_ != b.rows_)
            throw Error(Errc::dimension_mismatch, "matrix product shape mismatch");
        PolyMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Polynomial& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) = add(r.at(i, j), mul(aik, b.at(k, j), F), F);
                }
            }
        return r;
    }

    friend PolyMatrix transpose(const PolyMatrix& a)
    {
        PolyMatrix r(a.cols_, a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(j, i) = a.at(i, j);
        return r;
    }

    friend PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b)
    {
        if (a.cols_ != b.cols_)
            throw Error(Errc::dimension_mismatch, "vstack column mismatch");
        PolyMatrix r(a.rows_ + b.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
        return r;
    }

    friend PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b)
    {
        if (a.rows_ != b.rows_)
            throw Error(Errc::dimension_mismatch, "hstack row mismatch");
        PolyMatrix r(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        }
        return r;
    }

    friend PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b)
    {
        PolyMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
        return r;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Polynomial> e_;
};

}  // namespace syzlab
