#ifndef RINEHART_RING_HPP
#define RINEHART_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rinehart/poly.hpp"

namespace rinehart {

/// Ambient variables plus an optional principal modulus: R = Q[x_1..x_n]/<f>.
/// A single generator is a Groebner basis of the ideal it generates, so
/// division by the modulus yields canonical representatives.
class RingCtx {
public:
    RingCtx(std::vector<std::string> variables, MonomialOrder order);
    RingCtx(std::vector<std::string> variables, Poly modulus, MonomialOrder order);

    size_t nvars() const { return variables_.size(); }
    const std::vector<std::string>& variables() const { return variables_; }
    const MonomialOrder& order() const { return order_; }
    bool has_modulus() const { return modulus_.has_value(); }
    const Poly& modulus() const;
    std::optional<size_t> variable_index(const std::string& name) const;

    /// Canonical remainder of p modulo the modulus (p itself when absent).
    /// No monomial of the result is divisible by the leading monomial of the
    /// modulus; the map is linear in p and idempotent.
    Poly reduce(const Poly& p) const;

    /// Division with quotient: p = q * modulus + reduce(p).
    std::pair<Poly, Poly> divide(const Poly& p) const; // (quotient, remainder)

    bool ideal_member(const Poly& p) const;

    /// Monomials of degree <= maxdeg that are reduced (not divisible by the
    /// leading monomial of the modulus) — a basis slice of R.
    std::vector<Monomial> reduced_monomials(uint32_t maxdeg) const;

    std::string poly_str(const Poly& p) const;

    bool same_ring(const RingCtx& o) const;

private:
    std::vector<std::string> variables_;
    std::optional<Poly> modulus_;
    MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const RingCtx>;

} // namespace rinehart

#endif
