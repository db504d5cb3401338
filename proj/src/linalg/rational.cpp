#include "kodaira/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace kodaira {

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

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

std::string to_string(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer parse_integer(std::string_view text)
{
    text = trim(text);
    if (!is_integer_literal(text))
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    if (text[0] == '+')
        text.remove_prefix(1);
    return Integer(std::string(text));
}

Rational parse_rational(std::string_view text)
{
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    const std::string_view den_text = trim(text.substr(slash + 1));
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("signed denominator in '" + std::string(text) + "'");
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(den_text);
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace kodaira
