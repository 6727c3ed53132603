#ifndef RINEHART_DERIVATION_HPP
#define RINEHART_DERIVATION_HPP

#include <string>
#include <vector>

#include "rinehart/ring.hpp"

namespace rinehart {

/// A derivation D = sum_i c_i d/dx_i of the context ring. When the context
/// has a modulus the coefficients are kept reduced, representing the induced
/// derivation of the quotient.
class Derivation {
public:
    Derivation(RingPtr ctx, std::vector<Poly> coeffs);
    static Derivation zero(RingPtr ctx);

    const RingPtr& ctx() const { return ctx_; }
    const std::vector<Poly>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    Derivation operator+(const Derivation& o) const;
    Derivation operator-(const Derivation& o) const;
    Derivation operator-() const;
    Derivation scaled(const Rational& c) const;
    Derivation scaled(const Poly& f) const; // module action, reduced
    bool operator==(const Derivation& o) const;

    /// sum_i c_i * dp/dx_i without reduction (action on representatives).
    Poly apply_raw(const Poly& p) const;

    std::string to_string() const; // e.g. "2*y*dy - 2*z*dz"

private:
    void check_ctx(const Derivation& o) const;

    RingPtr ctx_;
    std::vector<Poly> coeffs_;
};

/// D(p), reduced when the context has a modulus.
Poly apply(const Derivation& d, const Poly& p);

/// Commutator [D1, D2], coefficientwise apply(D1, c2_i) - apply(D2, c1_i).
Derivation bracket(const Derivation& a, const Derivation& b);

/// True iff D(f) lies in <f> for the context modulus f. D may live in the
/// ambient ring with the same variables.
bool is_logarithmic(const Derivation& d, const RingCtx& ctx);

/// The induced derivation on the quotient; requires is_logarithmic.
Derivation restrict_to_quotient(const Derivation& d, RingPtr quotient);

/// The ambient polynomial ring of a quotient context (same variables and
/// order, no modulus).
RingPtr ambient_of(const RingCtx& ctx);

/// Q-basis of logarithmic derivations with coefficient degree <= degree_bound,
/// computed as the nullspace of the reduction of sum_i c_i df/dx_i. Basis
/// vectors come out of the reduced row echelon form, columns ordered by
/// (variable, graded-lex monomial).
struct LogDerResult {
    RingPtr ambient;                  // basis derivations live here
    std::vector<Derivation> basis;
    std::vector<Poly> action_on_modulus; // raw D(f) per basis element
    std::vector<size_t> flagged;      // basis indices with D(f) != 0 (in <f> but nonzero)
};
LogDerResult solve_log_derivations(const RingPtr& ctx, int degree_bound);

/// Flattens a derivation into Q-coordinates over (variable, monomial) pairs
/// with monomial degree <= maxdeg; used for span comparisons.
std::vector<Rational> coeff_vector(const Derivation& d, uint32_t maxdeg);

/// True iff d lies in the Q-span of the given derivations (all over one
/// context, coefficient degrees <= maxdeg).
bool in_q_span(const Derivation& d, const std::vector<Derivation>& span, uint32_t maxdeg);

} // namespace rinehart

#endif
