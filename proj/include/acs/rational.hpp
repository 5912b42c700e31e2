#ifndef ACS_RATIONAL_HPP
#define ACS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace acs {

/// Error type for every mathematical or structural failure in the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact scalars. Expression templates are switched off so results behave as
// plain values in generic code.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline BigInt rational_num(const Rational& q) { return BigInt(numerator(q)); }
inline BigInt rational_den(const Rational& q) { return BigInt(denominator(q)); }

/// Canonical string form: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string rational_string(const Rational& q)
{
    if (rational_den(q) == 1) return rational_num(q).str();
    return rational_num(q).str() + "/" + rational_den(q).str();
}

namespace detail {
inline bool parse_int(const std::string& s, BigInt& out)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') return false;
    out = BigInt(s);
    return true;
}
} // namespace detail

/// Parses "p" or "p/q". Rejects anything else (whitespace, empty parts, q = 0).
inline Rational parse_rational(const std::string& s)
{
    const std::size_t slash = s.find('/');
    BigInt num, den = 1;
    if (slash == std::string::npos) {
        if (!detail::parse_int(s, num)) throw error("invalid rational literal: '" + s + "'");
    } else {
        if (!detail::parse_int(s.substr(0, slash), num) ||
            !detail::parse_int(s.substr(slash + 1), den) || den == 0)
            throw error("invalid rational literal: '" + s + "'");
    }
    Rational q(num);
    q /= Rational(den);
    return q;
}

/// Complex number with exact rational real and imaginary parts. Scalar field
/// of the complexification g^C.
struct GaussianRational {
    Rational re{};
    Rational im{};

    GaussianRational() = default;
    GaussianRational(int v) : re(v) {}                                  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)) {}                  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b)
    {
        const Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw error("division by zero Gaussian rational");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational conj() const { return {re, -im}; }
};

inline std::string gaussian_string(const GaussianRational& z)
{
    if (z.im == 0) return rational_string(z.re);
    std::string s = rational_string(z.re);
    s += (z.im > 0) ? "+" : "-";
    Rational a = z.im < 0 ? Rational(-z.im) : z.im;
    s += rational_string(a) + "i";
    return s;
}

namespace scalar {
template <class T> inline bool is_zero(const T& v) { return v == T(0); }
template <> inline bool is_zero<GaussianRational>(const GaussianRational& v) { return v.is_zero(); }
} // namespace scalar

} // namespace acs

#endif
