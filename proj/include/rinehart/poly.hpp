#ifndef RINEHART_POLY_HPP
#define RINEHART_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "rinehart/monomial.hpp"
#include "rinehart/rational.hpp"

namespace rinehart {

/// Exact multivariate polynomial over Q. Terms map monomials to nonzero
/// coefficients; the zero polynomial is the empty map.
class Poly {
public:
    Poly() = default;
    explicit Poly(size_t nvars) : nvars_(nvars) {}
    Poly(size_t nvars, const Rational& c); // constant
    static Poly variable(size_t nvars, size_t index);
    static Poly monomial_term(Monomial m, const Rational& c);

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // 0 for the zero polynomial
    uint32_t degree() const;        // total degree; 0 for the zero polynomial
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c); // accumulates, drops zeros

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const; // arbitrary total order for map keys

    Poly pow(uint32_t e) const;

    /// Leading term with respect to an order; polynomial must be nonzero.
    std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Renders with terms in descending `order`, e.g. "3/2*x^2*y - z + 1".
    std::string to_string(const std::vector<std::string>& varnames,
                          const MonomialOrder& order) const;

private:
    void check_compatible(const Poly& o) const;

    size_t nvars_ = 0;
    std::map<Monomial, Rational> terms_;
};

/// Formal partial derivative with respect to variable `var`.
Poly partial(const Poly& p, size_t var);

} // namespace rinehart

#endif
