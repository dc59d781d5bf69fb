#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fdstencil {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction. Always stored reduced with a
/// positive denominator; every operation is exact, nothing ever rounds.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational reciprocal() const;

    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    Rational operator/(const Rational& rhs) const;

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p/q" reduced, or "p" alone when the denominator is 1.
    std::string str() const;

    /// Accepts "p", "p/q", and plain decimals like "-4.25" (converted exactly).
    static Rational parse(std::string_view text);

    /// Exact lift of a finite double (every finite double is p / 2^e).
    static Rational from_double(double x);

    /// Nearest double, ties to even. Correct for any magnitude of p and q.
    double to_double() const;

    /// Smallest double >= the exact value. Used when a bound must never be
    /// understated by the conversion.
    double to_double_round_up() const;

private:
    BigInt num_;
    BigInt den_;  // > 0

    void reduce();
};

Rational abs(const Rational& r);

/// r^e with exact arithmetic; negative exponents invert (throws on 0^-e).
Rational pow(const Rational& r, long long e);

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt factorial(int n);
BigInt binomial(int n, int j);

/// The rational with the smallest denominator in the closed interval
/// [lo, hi] (Stern-Brocot descent). Ties resolve toward zero.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

using RationalVector = std::vector<Rational>;

}  // namespace fdstencil
