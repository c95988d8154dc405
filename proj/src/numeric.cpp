#include "khovlab/numeric.hpp"

#include <stdexcept>

namespace khovlab {

Rational make_rational(const BigInt &num, const BigInt &den) {
    if (den == 0)
        throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

BigInt rational_floor(const Rational &q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

BigInt rational_ceil(const Rational &q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(const BigInt &n, unsigned k) {
    if (n < 0)
        throw std::domain_error("binomial: negative n");
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

BigInt power(const BigInt &base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

std::string rational_to_string(const Rational &q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_to_decimal(const Rational &q, unsigned digits) {
    BigInt scale = power(BigInt(10), digits);
    BigInt scaled;
    mpz_tdiv_q(scaled.get_mpz_t(), BigInt(q.get_num() * scale).get_mpz_t(),
               q.get_den().get_mpz_t());
    bool neg = scaled < 0;
    std::string s = BigInt(abs(scaled)).get_str();
    if (s.size() <= digits)
        s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

} // namespace khovlab
