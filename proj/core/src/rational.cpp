#include "eulerloc/rational.hpp"

#include <cctype>

#include "eulerloc/error.hpp"

namespace eulerloc {

std::string to_string(const Rational& value)
{
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s[0] == '+')
        s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num));

    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
    const Integer d = parse_integer(den);
    if (d == 0)
        throw Error(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

}  // namespace eulerloc
