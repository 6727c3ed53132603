#include "rinehart/ring.hpp"

#include <set>

#include "rinehart/errors.hpp"

namespace rinehart {

static void check_variables(const std::vector<std::string>& vars)
{
    if (vars.empty())
        throw user_error("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars)
        if (!seen.insert(v).second)
            throw user_error("duplicate variable name: '" + v + "'");
}

RingCtx::RingCtx(std::vector<std::string> variables, MonomialOrder order)
    : variables_(std::move(variables)), order_(std::move(order))
{
    check_variables(variables_);
}

RingCtx::RingCtx(std::vector<std::string> variables, Poly modulus, MonomialOrder order)
    : variables_(std::move(variables)), modulus_(std::move(modulus)), order_(std::move(order))
{
    check_variables(variables_);
    if (modulus_->nvars() != variables_.size())
        throw user_error("modulus variable-count mismatch");
    if (modulus_->is_zero() || modulus_->is_constant())
        throw user_error("modulus must be nonzero and nonconstant");
}

const Poly& RingCtx::modulus() const
{
    if (!modulus_)
        throw user_error("no modulus configured");
    return *modulus_;
}

std::optional<size_t> RingCtx::variable_index(const std::string& name) const
{
    for (size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == name)
            return i;
    return std::nullopt;
}

std::pair<Poly, Poly> RingCtx::divide(const Poly& p) const
{
    if (p.nvars() != nvars())
        throw user_error("variable-count mismatch");
    if (!modulus_)
        return {Poly(nvars()), p};

    const auto [lm, lc] = modulus_->leading_term(order_);
    Poly quotient(nvars());
    Poly remainder(nvars());
    Poly work = p;
    while (!work.is_zero()) {
        const auto [wm, wc] = work.leading_term(order_);
        if (mono_divides(lm, wm)) {
            const Poly t = Poly::monomial_term(mono_div(wm, lm), wc / lc);
            quotient += t;
            work -= t * *modulus_;
        } else {
            remainder.add_term(wm, wc);
            work.add_term(wm, -wc);
        }
    }
    return {quotient, remainder};
}

Poly RingCtx::reduce(const Poly& p) const
{
    if (!modulus_) {
        if (p.nvars() != nvars())
            throw user_error("variable-count mismatch");
        return p;
    }
    return divide(p).second;
}

bool RingCtx::ideal_member(const Poly& p) const
{
    if (!modulus_)
        throw user_error("no modulus configured");
    return reduce(p).is_zero();
}

std::vector<Monomial> RingCtx::reduced_monomials(uint32_t maxdeg) const
{
    auto all = monomials_up_to_degree(nvars(), maxdeg);
    if (!modulus_)
        return all;
    const Monomial lm = modulus_->leading_term(order_).first;
    std::vector<Monomial> out;
    for (auto& m : all)
        if (!mono_divides(lm, m))
            out.push_back(std::move(m));
    return out;
}

std::string RingCtx::poly_str(const Poly& p) const
{
    return p.to_string(variables_, order_);
}

bool RingCtx::same_ring(const RingCtx& o) const
{
    if (variables_ != o.variables_)
        return false;
    if (modulus_.has_value() != o.modulus_.has_value())
        return false;
    if (modulus_ && !(*modulus_ == *o.modulus_))
        return false;
    return true;
}

} // namespace rinehart
