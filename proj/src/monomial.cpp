#include "rinehart/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "rinehart/errors.hpp"

namespace rinehart {

uint32_t total_degree(const Monomial& m)
{
    uint32_t d = 0;
    for (uint32_t e : m)
        d += e;
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b)
{
    if (a.size() != b.size())
        throw user_error("monomial variable-count mismatch");
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b)
{
    if (a.size() != b.size())
        throw user_error("monomial variable-count mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a)
{
    if (!mono_divides(a, b))
        throw internal_error("mono_div: not divisible");
    Monomial r(b.size());
    for (size_t i = 0; i < b.size(); ++i)
        r[i] = b[i] - a[i];
    return r;
}

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const
{
    auto at = [&](const Monomial& m, size_t i) -> uint32_t {
        return priority.empty() ? m[i] : m[priority[i]];
    };
    const size_t n = a.size();
    if (b.size() != n)
        throw user_error("monomial variable-count mismatch");
    const uint32_t da = total_degree(a), db = total_degree(b);
    switch (kind) {
    case OrderKind::lex:
        for (size_t i = 0; i < n; ++i)
            if (at(a, i) != at(b, i))
                return at(a, i) > at(b, i);
        return false;
    case OrderKind::grlex:
        if (da != db)
            return da > db;
        for (size_t i = 0; i < n; ++i)
            if (at(a, i) != at(b, i))
                return at(a, i) > at(b, i);
        return false;
    case OrderKind::grevlex:
        if (da != db)
            return da > db;
        // rightmost differing exponent: smaller wins
        for (size_t i = n; i-- > 0;)
            if (at(a, i) != at(b, i))
                return at(a, i) < at(b, i);
        return false;
    }
    return false;
}

MonomialOrder make_order(OrderKind kind, size_t nvars)
{
    MonomialOrder o;
    o.kind = kind;
    o.priority.resize(nvars);
    std::iota(o.priority.begin(), o.priority.end(), 0u);
    return o;
}

OrderKind order_kind_from_string(const std::string& name)
{
    if (name == "grevlex")
        return OrderKind::grevlex;
    if (name == "grlex")
        return OrderKind::grlex;
    if (name == "lex")
        return OrderKind::lex;
    throw user_error("unknown monomial order: '" + name + "'");
}

std::string order_kind_to_string(OrderKind k)
{
    switch (k) {
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::grlex: return "grlex";
    case OrderKind::lex: return "lex";
    }
    return "?";
}

static void fill_degree(std::vector<Monomial>& out, Monomial& cur, size_t var, uint32_t rem)
{
    if (var + 1 == cur.size()) {
        cur[var] = rem;
        out.push_back(cur);
        return;
    }
    for (uint32_t e = 0; e <= rem; ++e) {
        cur[var] = e;
        fill_degree(out, cur, var + 1, rem - e);
    }
    cur[var] = 0;
}

std::vector<Monomial> monomials_up_to_degree(size_t nvars, uint32_t maxdeg)
{
    std::vector<Monomial> out;
    if (nvars == 0) {
        out.push_back(Monomial{});
        return out;
    }
    Monomial cur(nvars, 0);
    for (uint32_t d = 0; d <= maxdeg; ++d) {
        std::vector<Monomial> level;
        fill_degree(level, cur, 0, d);
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace rinehart
