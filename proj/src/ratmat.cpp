#include "rinehart/ratmat.hpp"

#include <atomic>

#include "rinehart/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rinehart {

RatMat RatMat::identity(size_t n)
{
    RatMat m(n, n);
    for (size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RatMat RatMat::operator*(const RatMat& o) const
{
    if (cols_ != o.rows_)
        throw internal_error("matrix shape mismatch in product");
    RatMat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0)
                continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw internal_error("matrix shape mismatch in difference");
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] - o.a_[i];
    return r;
}

std::vector<Rational> RatMat::apply(const std::vector<Rational>& v) const
{
    if (v.size() != cols_)
        throw internal_error("matrix apply dimension mismatch");
    std::vector<Rational> r(rows_, Rational(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0)
                r[i] += at(i, j) * v[j];
    return r;
}

RatMat RatMat::transposed() const
{
    RatMat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

bool RatMat::is_zero() const
{
    for (const auto& x : a_)
        if (x != 0)
            return false;
    return true;
}

namespace {
std::atomic<ExecMode> g_mode{
#ifdef _OPENMP
    ExecMode::parallel
#else
    ExecMode::serial
#endif
};
} // namespace

ExecMode default_exec_mode() { return g_mode.load(); }
void set_default_exec_mode(ExecMode m) { g_mode.store(m); }

// Gauss-Jordan. The pivot choice (first nonzero below) and the arithmetic
// per eliminated row are identical in both modes, so the outputs match
// entry for entry.
static std::vector<size_t> rref_serial(RatMat& m)
{
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t pr = row;
        while (pr < m.rows() && m.at(pr, col) == 0)
            ++pr;
        if (pr == m.rows())
            continue;
        if (pr != row)
            for (size_t j = col; j < m.cols(); ++j)
                std::swap(m.at(pr, j), m.at(row, j));
        const Rational inv = Rational(1) / m.at(row, col);
        for (size_t j = col; j < m.cols(); ++j)
            m.at(row, j) *= inv;
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0)
                continue;
            const Rational f = m.at(r, col);
            for (size_t j = col; j < m.cols(); ++j)
                m.at(r, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

static std::vector<size_t> rref_parallel(RatMat& m)
{
#ifndef _OPENMP
    return rref_serial(m);
#else
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t pr = row;
        while (pr < m.rows() && m.at(pr, col) == 0)
            ++pr;
        if (pr == m.rows())
            continue;
        if (pr != row)
            for (size_t j = col; j < m.cols(); ++j)
                std::swap(m.at(pr, j), m.at(row, j));
        const Rational inv = Rational(1) / m.at(row, col);
        for (size_t j = col; j < m.cols(); ++j)
            m.at(row, j) *= inv;
        const long nrows = static_cast<long>(m.rows());
#pragma omp parallel for schedule(dynamic)
        for (long r = 0; r < nrows; ++r) {
            if (static_cast<size_t>(r) == row || m.at(r, col) == 0)
                continue;
            const Rational f = m.at(r, col);
            for (size_t j = col; j < m.cols(); ++j)
                m.at(r, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
#endif
}

std::vector<size_t> rref(RatMat& m, ExecMode mode)
{
    return mode == ExecMode::serial ? rref_serial(m) : rref_parallel(m);
}

size_t rank(RatMat m, ExecMode mode)
{
    return rref(m, mode).size();
}

std::vector<std::vector<Rational>> nullspace(RatMat m, ExecMode mode)
{
    const size_t n = m.cols();
    const auto pivots = rref(m, mode);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots)
        is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(n, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatMat> solve(const RatMat& m, const RatMat& rhs)
{
    if (m.rows() != rhs.rows())
        throw internal_error("solve: row mismatch");
    RatMat aug(m.rows(), m.cols() + rhs.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        for (size_t j = 0; j < rhs.cols(); ++j)
            aug.at(i, m.cols() + j) = rhs.at(i, j);
    }
    const auto pivots = rref(aug);
    // any pivot in the rhs block means inconsistency
    for (size_t c : pivots)
        if (c >= m.cols())
            return std::nullopt;
    RatMat x(m.cols(), rhs.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (size_t j = 0; j < rhs.cols(); ++j)
            x.at(pivots[r], j) = aug.at(r, m.cols() + j);
    return x;
}

std::optional<RatMat> inverse(const RatMat& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    RatMat aug(m.rows(), 2 * m.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols() + i) = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() != m.rows())
        return std::nullopt;
    for (size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] != r)
            return std::nullopt;
    RatMat inv(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            inv.at(i, j) = aug.at(i, m.cols() + j);
    return inv;
}

bool is_invertible(const RatMat& m)
{
    return m.rows() == m.cols() && rank(m) == m.rows();
}

} // namespace rinehart
