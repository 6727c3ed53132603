#ifndef RINEHART_MONOMIAL_HPP
#define RINEHART_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rinehart {

/// Exponent vector, one entry per context variable.
using Monomial = std::vector<uint32_t>;

uint32_t total_degree(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_div(const Monomial& b, const Monomial& a); // b / a, requires a | b

enum class OrderKind { grevlex, grlex, lex };

/// Total monomial order: one of grevlex/grlex/lex with a variable priority
/// permutation (priority[0] is the most significant variable).
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    std::vector<uint32_t> priority; // empty means identity

    /// Strict "a comes before b" in descending significance (a > b).
    bool greater(const Monomial& a, const Monomial& b) const;
};

MonomialOrder make_order(OrderKind kind, size_t nvars);
OrderKind order_kind_from_string(const std::string& name);
std::string order_kind_to_string(OrderKind k);

/// Enumerates all monomials in nvars variables of total degree <= maxdeg,
/// ascending in (degree, lex) — a fixed deterministic order used for
/// linear-system columns.
std::vector<Monomial> monomials_up_to_degree(size_t nvars, uint32_t maxdeg);

} // namespace rinehart

#endif
