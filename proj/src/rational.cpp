#include "blgeo/rational.hpp"

#include <stdexcept>

namespace blgeo {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!all_digits(digits)) throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
    std::string text(s.front() == '+' ? s.substr(1) : s);
    return Integer(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        Integer den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    if (auto dot_pos = text.find('.'); dot_pos != std::string_view::npos) {
        std::string_view head = text.substr(0, dot_pos);
        std::string_view tail = text.substr(dot_pos + 1);
        bool negative = !head.empty() && head.front() == '-';
        if (!head.empty() && (head.front() == '-' || head.front() == '+')) head.remove_prefix(1);
        if ((!head.empty() && !all_digits(head)) || !all_digits(tail))
            throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
        Integer whole = head.empty() ? Integer(0) : Integer(std::string(head), 10);
        Integer frac(std::string(tail), 10);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, tail.size());
        Rational r(whole * den + frac, den);
        r.canonicalize();
        return negative ? Rational(-r) : r;
    }
    return Rational(parse_integer(text));
}

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_str();
}

std::string to_string(const Vector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

Rational dot(const Vector& a, const Vector& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vector add(const Vector& a, const Vector& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector subtract(const Vector& a, const Vector& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("subtract: length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vector scale(const Rational& factor, const Vector& v)
{
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = factor * v[i];
    return out;
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t index)
{
    Vector v(n, Rational(0));
    v.at(index) = 1;
    return v;
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vector primitive_direction(const Vector& v)
{
    if (is_zero(v)) return v;
    Integer lcm_den = 1;
    for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> ints(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational scaled = v[i] * lcm_den;
        ints[i] = scaled.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
    return out;
}

Rational factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational power(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("power: zero to a negative exponent");
        return Rational(1) / power(base, -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace blgeo
