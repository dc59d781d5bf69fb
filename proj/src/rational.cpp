#include "fdstencil/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace fdstencil {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) {
        throw std::domain_error("denominator must be nonzero");
    }
    reduce();
}

void Rational::reduce() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) {
        throw std::domain_error("reciprocal of zero");
    }
    Rational r;
    if (num_ < 0) {
        r.num_ = -den_;
        r.den_ = -num_;
    } else {
        r.num_ = den_;
        r.den_ = num_;
    }
    return r;
}

Rational Rational::operator+(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator*(const Rational& rhs) const {
    return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.num_ == 0) {
        throw std::domain_error("division by zero");
    }
    return Rational(num_ * rhs.den_, den_ * rhs.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void parse_fail(std::string_view text) {
    throw std::invalid_argument("cannot parse rational: '" + std::string(text) + "'");
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) parse_fail(text);

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) parse_fail(text);

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view p = s.substr(0, slash);
        std::string_view q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) parse_fail(text);
        BigInt den{std::string(q)};
        if (den == 0) parse_fail(text);
        value = Rational(BigInt{std::string(p)}, std::move(den));
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) parse_fail(text);
        if (!whole.empty() && !all_digits(whole)) parse_fail(text);
        if (!frac.empty() && !all_digits(frac)) parse_fail(text);
        std::string digits{whole};
        digits += frac;
        BigInt scale(1);
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value = Rational(BigInt{digits.empty() ? std::string("0") : digits}, std::move(scale));
    } else {
        if (!all_digits(s)) parse_fail(text);
        value = Rational(BigInt{std::string(s)});
    }
    return negative ? -value : value;
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("value must be finite");
    }
    if (x == 0.0) return Rational();
    int e = 0;
    const double m = std::frexp(x, &e);  // x = m * 2^e, |m| in [0.5, 1)
    const auto scaled = static_cast<long long>(std::ldexp(m, 53));  // exact integer
    const long shift = static_cast<long>(e) - 53;
    if (shift >= 0) {
        return Rational(BigInt(scaled) << shift);
    }
    return Rational(BigInt(scaled), BigInt(1) << -shift);
}

double Rational::to_double() const {
    if (num_ == 0) return 0.0;
    const bool negative = num_ < 0;
    const BigInt a = negative ? BigInt(-num_) : num_;
    const BigInt& b = den_;

    // Scale a/b so the integer quotient carries at least 54 bits, then round
    // the quotient to a 53-bit mantissa (nearest, ties to even). The division
    // remainder supplies the sticky bit, so the result is correctly rounded
    // regardless of how large the numerator and denominator are individually.
    long shift = 55 - (static_cast<long>(mp::msb(a)) - static_cast<long>(mp::msb(b)));
    BigInt q, r;
    const auto divide_at = [&](long s) {
        if (s >= 0) {
            mp::divide_qr(BigInt(a << s), b, q, r);
        } else {
            mp::divide_qr(a, BigInt(b << -s), q, r);
        }
    };
    divide_at(shift);
    while (mp::msb(q) < 54) {
        ++shift;
        divide_at(shift);
    }

    const long drop = static_cast<long>(mp::msb(q)) + 1 - 53;
    const BigInt low = q & ((BigInt(1) << drop) - 1);
    const BigInt half = BigInt(1) << (drop - 1);
    q >>= drop;
    const bool sticky = r != 0;
    if (low > half || (low == half && (sticky || mp::bit_test(q, 0)))) {
        ++q;  // may carry to 2^53, still exactly representable
    }
    const double mantissa = q.convert_to<double>();
    const double value = std::ldexp(mantissa, static_cast<int>(drop - shift));
    return negative ? -value : value;
}

double Rational::to_double_round_up() const {
    double d = to_double();
    if (!std::isfinite(d)) return d;
    if (from_double(d) < *this) {
        d = std::nextafter(d, std::numeric_limits<double>::infinity());
    }
    return d;
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational& r, long long e) {
    if (e < 0) {
        return pow(r.reciprocal(), -e);
    }
    Rational acc(1);
    Rational base = r;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

BigInt factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("factorial of negative argument");
    }
    BigInt acc(1);
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

BigInt binomial(int n, int j) {
    if (j < 0 || j > n) return 0;
    j = std::min(j, n - j);
    BigInt acc(1);
    for (int i = 1; i <= j; ++i) {
        acc *= n - j + i;
        acc /= i;
    }
    return acc;
}

namespace {

BigInt floor_of(const Rational& r) {
    BigInt q = r.numerator() / r.denominator();
    if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
    return q;
}

}  // namespace

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
    if (lo > hi) {
        throw std::invalid_argument("empty interval");
    }
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) return -simplest_rational_between(-hi, -lo);

    // 0 < lo <= hi: walk the continued fraction of the interval.
    const BigInt fl = floor_of(lo);
    if (Rational(fl) == lo) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    const Rational frac_lo = lo - Rational(fl);
    const Rational frac_hi = hi - Rational(fl);
    const Rational inner = simplest_rational_between(frac_hi.reciprocal(), frac_lo.reciprocal());
    return Rational(fl) + inner.reciprocal();
}

}  // namespace fdstencil
