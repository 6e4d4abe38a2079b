#include "entcone/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace entcone {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start])))
        ++start;
    s = s.substr(start);
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    if (s.front() == '+')
        s.erase(0, 1);
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
    Rational value;
    if (value.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + std::string(text));
    if (value.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + std::string(text));
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            sum += a[i] * b[i];
    }
    return sum;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Integer sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            mpz_addmul(sum.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    }
    return sum;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            sum += Rational(a[i]) * b[i];
    }
    return sum;
}

IntegerVector primitive_integer(std::span<const Rational> v)
{
    Integer denominator_lcm = 1;
    for (const auto& x : v) {
        if (sgn(x) != 0)
            mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
                    x.get_den_mpz_t());
    }
    IntegerVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0)
            continue;
        out[i] = v[i].get_num() * (denominator_lcm / v[i].get_den());
    }
    make_primitive(out);
    return out;
}

bool make_primitive(IntegerVector& v)
{
    Integer g = 0;
    for (const auto& x : v) {
        if (sgn(x) != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1)
                return true;
        }
    }
    if (g == 0)
        return false;
    for (auto& x : v) {
        if (sgn(x) != 0)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    return true;
}

RationalVector to_rational(std::span<const Integer> v)
{
    RationalVector out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.emplace_back(x);
    return out;
}

bool is_zero(std::span<const Rational> v)
{
    for (const auto& x : v) {
        if (sgn(x) != 0)
            return false;
    }
    return true;
}

bool is_zero(std::span<const Integer> v)
{
    for (const auto& x : v) {
        if (sgn(x) != 0)
            return false;
    }
    return true;
}

}  // namespace entcone
