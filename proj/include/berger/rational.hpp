#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace berger {

// Thrown when an exact computation leaves the 64-bit range.
class RationalOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Reduced fraction num/den with den > 0. Arithmetic is checked.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    // Accepts "p", "p/q" and "-p/q". Decimal or exponent notation is rejected.
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    int sign() const { return (num_ > 0) - (num_ < 0); }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

// a + b*sqrt(r) with rational a, b and r >= 0. Signs are decided exactly.
class QuadraticSurd {
public:
    QuadraticSurd() = default;
    QuadraticSurd(Rational a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QuadraticSurd(Rational a, Rational b, Rational radicand);

    const Rational& rational_part() const { return a_; }
    const Rational& surd_coeff() const { return b_; }
    const Rational& radicand() const { return r_; }

    bool is_rational() const { return b_.is_zero() || r_.is_zero(); }
    int sign() const;
    bool is_zero() const { return sign() == 0; }
    double to_double() const;
    std::string str() const;

    friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
        return (x - y).sign() == 0;
    }
    // Only defined when both operands share a radicand or one is rational.
    friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);

private:
    Rational a_{};
    Rational b_{};
    Rational r_{};
};

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& v);

}  // namespace berger
