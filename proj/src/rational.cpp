#include "sqt/rational.hpp"

namespace sqt {

BigInt pow2(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

BigInt binomial(const BigInt& n, unsigned long r) {
    if (n < 0 || n < BigInt(static_cast<unsigned long>(r))) return 0;
    BigInt acc = 1;
    for (unsigned long i = 1; i <= r; ++i) {
        acc *= n - static_cast<long>(r - i);
        // acc holds i consecutive-integer products, so the division is exact.
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), i);
    }
    return acc;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&](const char* why) -> size_t {
        throw std::invalid_argument("bad fraction '" + std::string(text) + "': " + why);
    };
    size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    size_t numStart = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == numStart) fail("expected digits");
    BigInt num(std::string(text.substr(0, i)), 10);
    if (i == text.size()) return Rational(num, BigInt(1));
    if (text[i] != '/') fail("expected '/'");
    size_t denStart = ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == denStart) fail("expected digits after '/'");
    if (i != text.size()) fail("trailing characters");
    BigInt den(std::string(text.substr(denStart)), 10);
    return Rational(num, den);
}

std::string Rational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

BigInt denominator_lcm(const std::vector<Rational>& values) {
    BigInt acc = 1;
    for (const auto& v : values) acc = lcm(acc, v.den());
    return acc;
}

}  // namespace sqt
