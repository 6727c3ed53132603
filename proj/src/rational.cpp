#include "rinehart/rational.hpp"

namespace rinehart {

std::string rat_to_string(const Rational& r)
{
    if (rat_den(r) == 1)
        return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

Rational rat_from_string(const std::string& text)
{
    auto bad = [&] { throw user_error("malformed rational: '" + text + "'"); };
    if (text.empty())
        bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0)
            bad();
        return Rational(num, den);
    } catch (const std::exception&) {
        bad();
    }
    return Rational(); // unreachable
}

Int factorial(unsigned n)
{
    Int f = 1;
    for (unsigned k = 2; k <= n; ++k)
        f *= k;
    return f;
}

} // namespace rinehart
