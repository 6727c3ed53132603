#include "rinehart/poly.hpp"

#include <algorithm>
#include <sstream>

#include "rinehart/errors.hpp"

namespace rinehart {

Poly::Poly(size_t nvars, const Rational& c) : nvars_(nvars)
{
    if (c != 0)
        terms_.emplace(Monomial(nvars, 0), c);
}

Poly Poly::variable(size_t nvars, size_t index)
{
    if (index >= nvars)
        throw user_error("variable index out of range");
    Monomial m(nvars, 0);
    m[index] = 1;
    return monomial_term(std::move(m), Rational(1));
}

Poly Poly::monomial_term(Monomial m, const Rational& c)
{
    Poly p(m.size());
    if (c != 0)
        p.terms_.emplace(std::move(m), c);
    return p;
}

bool Poly::is_constant() const
{
    return terms_.empty()
        || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant_value() const
{
    if (!is_constant())
        throw user_error("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

uint32_t Poly::degree() const
{
    uint32_t d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, total_degree(m));
    return d;
}

Rational Poly::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c)
{
    if (m.size() != nvars_)
        throw user_error("variable-count mismatch");
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Poly::check_compatible(const Poly& o) const
{
    if (nvars_ != o.nvars_)
        throw user_error("variable-count mismatch");
}

Poly Poly::operator-() const
{
    Poly r(nvars_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const
{
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const
{
    Poly r = *this;
    r -= o;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    check_compatible(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    check_compatible(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const
{
    check_compatible(o);
    Poly r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Poly Poly::operator*(const Rational& c) const
{
    Poly r(nvars_);
    if (c == 0)
        return r;
    for (const auto& [m, k] : terms_)
        r.terms_.emplace(m, k * c);
    return r;
}

bool Poly::operator<(const Poly& o) const
{
    if (nvars_ != o.nvars_)
        return nvars_ < o.nvars_;
    return terms_ < o.terms_;
}

Poly Poly::pow(uint32_t e) const
{
    Poly r(nvars_, Rational(1));
    Poly base = *this;
    while (e) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return r;
}

std::pair<Monomial, Rational> Poly::leading_term(const MonomialOrder& order) const
{
    if (terms_.empty())
        throw internal_error("leading_term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.greater(it->first, best->first))
            best = it;
    return {best->first, best->second};
}

Rational Poly::evaluate(const std::vector<Rational>& point) const
{
    if (point.size() != nvars_)
        throw user_error("evaluation dimension mismatch");
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < nvars_; ++i)
            for (uint32_t e = 0; e < m[i]; ++e)
                t *= point[i];
        acc += t;
    }
    return acc;
}

std::string Poly::to_string(const std::vector<std::string>& varnames,
                            const MonomialOrder& order) const
{
    if (terms_.empty())
        return "0";
    std::vector<const std::pair<const Monomial, Rational>*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_)
        sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [&](auto* a, auto* b) {
        return order.greater(a->first, b->first);
    });

    std::ostringstream os;
    bool first = true;
    for (auto* t : sorted) {
        const auto& [m, c] = *t;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;

        std::string vars;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (!vars.empty())
                vars += "*";
            vars += varnames[i];
            if (m[i] > 1)
                vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty())
            os << rat_to_string(a);
        else if (a == 1)
            os << vars;
        else
            os << rat_to_string(a) << "*" << vars;
    }
    return os.str();
}

Poly partial(const Poly& p, size_t var)
{
    if (var >= p.nvars())
        throw user_error("partial: variable index out of range");
    Poly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0)
            continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * Rational(m[var]));
    }
    return r;
}

} // namespace rinehart
