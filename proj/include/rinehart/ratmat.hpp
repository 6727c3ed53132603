#ifndef RINEHART_RATMAT_HPP
#define RINEHART_RATMAT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rinehart/rational.hpp"

namespace rinehart {

/// Dense matrix over Q, row-major.
class RatMat {
public:
    RatMat() = default;
    RatMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}
    static RatMat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const RatMat& o) const { return !(*this == o); }

    RatMat operator*(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    RatMat transposed() const;
    bool is_zero() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// Row elimination backend. Both produce identical output; `parallel` runs
/// the per-row eliminations of each pivot step under OpenMP.
enum class ExecMode { serial, parallel };

/// Process-wide default used by every solver that does not take an explicit
/// mode. Defaults to parallel when built with OpenMP.
ExecMode default_exec_mode();
void set_default_exec_mode(ExecMode m);

/// In-place reduced row echelon form; returns the pivot column of each
/// pivot row in order.
std::vector<size_t> rref(RatMat& m, ExecMode mode);
inline std::vector<size_t> rref(RatMat& m) { return rref(m, default_exec_mode()); }

size_t rank(RatMat m, ExecMode mode);
inline size_t rank(RatMat m) { return rank(std::move(m), default_exec_mode()); }

/// Basis of the right nullspace { v : m v = 0 }. One vector per free column,
/// ascending, with a 1 in its free coordinate: the reduced row-echelon basis.
std::vector<std::vector<Rational>> nullspace(RatMat m, ExecMode mode);
inline std::vector<std::vector<Rational>> nullspace(RatMat m)
{
    return nullspace(std::move(m), default_exec_mode());
}

/// Solves m x = rhs (multiple right-hand sides, one per column of rhs).
/// Returns nullopt when inconsistent. Free variables are set to 0.
std::optional<RatMat> solve(const RatMat& m, const RatMat& rhs);

std::optional<RatMat> inverse(const RatMat& m);
bool is_invertible(const RatMat& m);

} // namespace rinehart

#endif
