#include "berger/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace berger {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool parse_int(std::string_view s, std::int64_t& out) {
    if (s.empty()) return false;
    std::string_view digits = s;
    if (digits.front() == '+' || digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty()) return false;
    for (char c : digits)
        if (c < '0' || c > '9') return false;
    if (s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

std::int64_t isqrt(std::int64_t v) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && static_cast<__int128>(r) * r > v) --r;
    while (static_cast<__int128>(r + 1) * (r + 1) <= v) ++r;
    return r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    constexpr __int128 lo = std::numeric_limits<std::int64_t>::min() + 1;
    constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi || d > hi) throw RationalOverflow("rational arithmetic overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.find_first_of(".eE") != std::string_view::npos)
        throw std::invalid_argument("'" + std::string(text) +
                                    "' is not an exact rational; write it as a fraction like 3/10");
    std::int64_t n = 0;
    std::int64_t d = 1;
    auto slash = text.find('/');
    bool ok = slash == std::string_view::npos
                  ? parse_int(text, n)
                  : parse_int(text.substr(0, slash), n) && parse_int(text.substr(slash + 1), d);
    if (!ok) throw std::invalid_argument("cannot parse rational '" + std::string(text) + "'");
    if (d == 0) throw std::invalid_argument("rational '" + std::string(text) + "' has zero denominator");
    return Rational(n, d);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
    *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                      static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    // cross-reduce first to keep intermediates small
    __int128 g1 = gcd128(num_, o.den_);
    __int128 g2 = gcd128(o.num_, den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    *this = from_wide((num_ / g1) * static_cast<__int128>(o.num_ / g2),
                      (den_ / g2) * static_cast<__int128>(o.den_ / g1));
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this *= from_wide(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

QuadraticSurd::QuadraticSurd(Rational a, Rational b, Rational radicand) : a_(a), b_(b), r_(radicand) {
    if (r_.sign() < 0) throw std::domain_error("negative radicand");
    if (!b_.is_zero() && !r_.is_zero()) {
        std::int64_t sn = isqrt(r_.num());
        std::int64_t sd = isqrt(r_.den());
        if (sn * sn == r_.num() && sd * sd == r_.den()) {
            a_ += b_ * Rational(sn, sd);
            b_ = 0;
        }
    }
    if (b_.is_zero() || r_.is_zero()) {
        b_ = 0;
        r_ = 0;
    }
}

int QuadraticSurd::sign() const {
    if (is_rational()) return a_.sign();
    int sa = a_.sign();
    int sb = b_.sign();
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 r
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * r_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

double QuadraticSurd::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(r_.to_double());
}

std::string QuadraticSurd::str() const {
    if (is_rational()) return a_.str();
    std::ostringstream os;
    if (!a_.is_zero()) os << a_ << (b_.sign() > 0 ? " + " : " - ");
    else if (b_.sign() < 0) os << "-";
    Rational mag = abs(b_);
    if (mag != Rational(1)) os << mag << "*";
    os << "sqrt(" << r_ << ")";
    return os.str();
}

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (y.is_rational()) return {x.a_ + y.a_, x.b_, x.r_};
    if (x.is_rational()) return {x.a_ + y.a_, y.b_, y.r_};
    if (x.r_ != y.r_) throw std::domain_error("adding surds with different radicands");
    return {x.a_ + y.a_, x.b_ + y.b_, x.r_};
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x + QuadraticSurd(-y.a_, -y.b_, y.r_);
}

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& v) { return os << v.str(); }

}  // namespace berger
