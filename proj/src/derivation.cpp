#include "rinehart/derivation.hpp"

#include <map>

#include "rinehart/errors.hpp"
#include "rinehart/ratmat.hpp"

namespace rinehart {

Derivation::Derivation(RingPtr ctx, std::vector<Poly> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != ctx_->nvars())
        throw user_error("derivation needs one coefficient per variable");
    for (auto& c : coeffs_)
        c = ctx_->reduce(c);
}

Derivation Derivation::zero(RingPtr ctx)
{
    std::vector<Poly> cs(ctx->nvars(), Poly(ctx->nvars()));
    return Derivation(std::move(ctx), std::move(cs));
}

bool Derivation::is_zero() const
{
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

void Derivation::check_ctx(const Derivation& o) const
{
    if (!ctx_->same_ring(*o.ctx_))
        throw user_error("derivation context mismatch");
}

Derivation Derivation::operator+(const Derivation& o) const
{
    check_ctx(o);
    std::vector<Poly> cs(coeffs_);
    for (size_t i = 0; i < cs.size(); ++i)
        cs[i] += o.coeffs_[i];
    return Derivation(ctx_, std::move(cs));
}

Derivation Derivation::operator-(const Derivation& o) const
{
    check_ctx(o);
    std::vector<Poly> cs(coeffs_);
    for (size_t i = 0; i < cs.size(); ++i)
        cs[i] -= o.coeffs_[i];
    return Derivation(ctx_, std::move(cs));
}

Derivation Derivation::operator-() const
{
    std::vector<Poly> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        cs.push_back(-c);
    return Derivation(ctx_, std::move(cs));
}

Derivation Derivation::scaled(const Rational& c) const
{
    std::vector<Poly> cs;
    cs.reserve(coeffs_.size());
    for (const auto& k : coeffs_)
        cs.push_back(k * c);
    return Derivation(ctx_, std::move(cs));
}

Derivation Derivation::scaled(const Poly& f) const
{
    std::vector<Poly> cs;
    cs.reserve(coeffs_.size());
    for (const auto& k : coeffs_)
        cs.push_back(k * f);
    return Derivation(ctx_, std::move(cs));
}

bool Derivation::operator==(const Derivation& o) const
{
    return ctx_->same_ring(*o.ctx_) && coeffs_ == o.coeffs_;
}

Poly Derivation::apply_raw(const Poly& p) const
{
    Poly r(ctx_->nvars());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero())
            r += coeffs_[i] * partial(p, i);
    return r;
}

std::string Derivation::to_string() const
{
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero())
            continue;
        const std::string c = ctx_->poly_str(coeffs_[i]);
        if (!out.empty())
            out += " + ";
        if (c == "1")
            out += "d" + ctx_->variables()[i];
        else if (coeffs_[i].term_count() > 1)
            out += "(" + c + ")*d" + ctx_->variables()[i];
        else
            out += c + "*d" + ctx_->variables()[i];
    }
    return out.empty() ? "0" : out;
}

Poly apply(const Derivation& d, const Poly& p)
{
    return d.ctx()->reduce(d.apply_raw(p));
}

Derivation bracket(const Derivation& a, const Derivation& b)
{
    if (!a.ctx()->same_ring(*b.ctx()))
        throw user_error("derivation context mismatch");
    std::vector<Poly> cs;
    cs.reserve(a.coeffs().size());
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        cs.push_back(apply(a, b.coeffs()[i]) - apply(b, a.coeffs()[i]));
    return Derivation(a.ctx(), std::move(cs));
}

bool is_logarithmic(const Derivation& d, const RingCtx& ctx)
{
    const Poly& f = ctx.modulus();
    if (d.ctx()->nvars() != ctx.nvars() || d.ctx()->variables() != ctx.variables())
        throw user_error("derivation context mismatch");
    return ctx.ideal_member(d.apply_raw(f));
}

Derivation restrict_to_quotient(const Derivation& d, RingPtr quotient)
{
    if (!is_logarithmic(d, *quotient))
        throw user_error("derivation is not logarithmic for the target modulus");
    return Derivation(std::move(quotient), d.coeffs());
}

RingPtr ambient_of(const RingCtx& ctx)
{
    return std::make_shared<RingCtx>(ctx.variables(), ctx.order());
}

LogDerResult solve_log_derivations(const RingPtr& ctx, int degree_bound)
{
    if (degree_bound < 0)
        throw user_error("degree bound must be nonnegative");
    const Poly& f = ctx->modulus();
    const size_t n = ctx->nvars();
    const auto mons = monomials_up_to_degree(n, static_cast<uint32_t>(degree_bound));

    // column (i, m) carries the reduced remainder of m * df/dx_i; reduction
    // is linear in the dividend, so membership is a nullspace computation
    std::vector<Poly> col_remainder;
    col_remainder.reserve(n * mons.size());
    std::map<Monomial, size_t> row_of;
    for (size_t i = 0; i < n; ++i) {
        const Poly dfi = partial(f, i);
        for (const auto& m : mons) {
            Poly r = ctx->reduce(Poly::monomial_term(m, Rational(1)) * dfi);
            for (const auto& [rm, rc] : r.terms())
                row_of.emplace(rm, 0);
            col_remainder.push_back(std::move(r));
        }
    }
    size_t idx = 0;
    for (auto& [m, r] : row_of)
        r = idx++;

    RatMat sys(row_of.size(), col_remainder.size());
    for (size_t c = 0; c < col_remainder.size(); ++c)
        for (const auto& [rm, rc] : col_remainder[c].terms())
            sys.at(row_of.at(rm), c) = rc;

    LogDerResult out;
    out.ambient = ambient_of(*ctx);
    for (const auto& v : nullspace(std::move(sys))) {
        std::vector<Poly> cs(n, Poly(n));
        size_t c = 0;
        for (size_t i = 0; i < n; ++i)
            for (const auto& m : mons) {
                if (v[c] != 0)
                    cs[i].add_term(m, v[c]);
                ++c;
            }
        Derivation d(out.ambient, std::move(cs));
        Poly act = d.apply_raw(f);
        if (!act.is_zero())
            out.flagged.push_back(out.basis.size());
        out.basis.push_back(std::move(d));
        out.action_on_modulus.push_back(std::move(act));
    }
    return out;
}

std::vector<Rational> coeff_vector(const Derivation& d, uint32_t maxdeg)
{
    const size_t n = d.ctx()->nvars();
    const auto mons = monomials_up_to_degree(n, maxdeg);
    std::vector<Rational> v;
    v.reserve(n * mons.size());
    for (size_t i = 0; i < n; ++i) {
        if (d.coeffs()[i].degree() > maxdeg && !d.coeffs()[i].is_zero())
            throw user_error("coefficient degree exceeds flattening bound");
        for (const auto& m : mons)
            v.push_back(d.coeffs()[i].coeff(m));
    }
    return v;
}

bool in_q_span(const Derivation& d, const std::vector<Derivation>& span, uint32_t maxdeg)
{
    const auto target = coeff_vector(d, maxdeg);
    RatMat m(target.size(), span.size() + 1);
    for (size_t j = 0; j < span.size(); ++j) {
        const auto col = coeff_vector(span[j], maxdeg);
        for (size_t i = 0; i < col.size(); ++i)
            m.at(i, j) = col[i];
    }
    for (size_t i = 0; i < target.size(); ++i)
        m.at(i, span.size()) = target[i];
    RatMat lhs(target.size(), span.size());
    for (size_t i = 0; i < target.size(); ++i)
        for (size_t j = 0; j < span.size(); ++j)
            lhs.at(i, j) = m.at(i, j);
    return rank(std::move(lhs)) == rank(std::move(m));
}

} // namespace rinehart
