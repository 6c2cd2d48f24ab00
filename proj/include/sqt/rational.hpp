#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sqt {

using BigInt = mpz_class;

// 2^e as a big integer.
BigInt pow2(unsigned long e);

// C(n, r); zero when n < r or n < 0.
BigInt binomial(const BigInt& n, unsigned long r);

BigInt lcm(const BigInt& a, const BigInt& b);

// Exact rational number. Stored reduced with a positive denominator; zero is
// 0/1, so value equality is structural equality.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const BigInt& n) : q_(n) {}
    Rational(const BigInt& num, const BigInt& den);

    // Accepts "p/q" or a bare integer "p". Throws std::invalid_argument on
    // syntax errors and std::domain_error on a zero denominator.
    static Rational parse(std::string_view text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_positive() const { return sgn(q_) > 0; }
    bool is_negative() const { return sgn(q_) < 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    // Always "num/den", e.g. "3/2", "-1/3", "0/1".
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) {
        q_ += o.q_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        q_ -= o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        q_ *= o.q_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    explicit Rational(mpq_class v) : q_(std::move(v)) {}
    mpq_class q_;
};

// lcm of all denominators; 1 for an empty range.
BigInt denominator_lcm(const std::vector<Rational>& values);

}  // namespace sqt
