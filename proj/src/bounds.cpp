#include "khovlab/bounds.hpp"

#include <stdexcept>

#include <mpfr.h>

#include "khovlab/errors.hpp"
#include "khovlab/lattice.hpp"
#include "khovlab/polytope.hpp"
#include "khovlab/sumset.hpp"

namespace khovlab {

namespace {

/// Exact value of an MPFR number as a rational (m * 2^e).
Rational mpfr_to_rational(mpfr_srcptr x) {
    if (mpfr_zero_p(x))
        return Rational(0);
    BigInt mantissa;
    mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), x);
    if (e >= 0) {
        BigInt scaled;
        mpz_mul_2exp(scaled.get_mpz_t(), mantissa.get_mpz_t(),
                     static_cast<mp_bitcnt_t>(e));
        return Rational(scaled);
    }
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    return make_rational(mantissa, den);
}

/// Encloses log_p(n) = ln n / ln p. Exact point when n is a power of p.
RationalInterval log_base_interval(std::int64_t n, std::int64_t p,
                                   unsigned bits) {
    std::int64_t rest = n;
    long a = 0;
    while (rest % p == 0) {
        rest /= p;
        ++a;
    }
    if (rest == 1)
        return {Rational(a), Rational(a), bits};

    mpfr_t ln_n_lo, ln_n_hi, ln_p_lo, ln_p_hi, q;
    mpfr_inits2(bits, ln_n_lo, ln_n_hi, ln_p_lo, ln_p_hi, q,
                static_cast<mpfr_ptr>(nullptr));
    mpfr_set_si(q, static_cast<long>(n), MPFR_RNDN); // exact, n is small
    mpfr_log(ln_n_lo, q, MPFR_RNDD);
    mpfr_log(ln_n_hi, q, MPFR_RNDU);
    mpfr_set_si(q, static_cast<long>(p), MPFR_RNDN);
    mpfr_log(ln_p_lo, q, MPFR_RNDD);
    mpfr_log(ln_p_hi, q, MPFR_RNDU);

    RationalInterval out;
    out.bits = bits;
    // ln n and ln p are positive (n, p >= 2), so the quotient brackets are
    // lo/hi and hi/lo with outward rounding.
    mpfr_div(q, ln_n_lo, ln_p_hi, MPFR_RNDD);
    out.lo = mpfr_to_rational(q);
    mpfr_div(q, ln_n_hi, ln_p_lo, MPFR_RNDU);
    out.hi = mpfr_to_rational(q);
    mpfr_clears(ln_n_lo, ln_n_hi, ln_p_lo, ln_p_hi, q,
                static_cast<mpfr_ptr>(nullptr));
    if (out.lo > out.hi)
        throw std::logic_error("log_base_interval: inverted bracket");
    return out;
}

} // namespace

Rational gsw_bound(std::int64_t setsize, int d, const Rational &volume) {
    if (setsize < 1)
        throw std::domain_error("gsw_bound: set size must be >= 1");
    if (d < 0 || (volume <= 0 && d > 0))
        throw std::domain_error("gsw_bound: invalid dimension/volume");
    Rational size(static_cast<long>(setsize));
    return Rational(factorial(static_cast<unsigned>(d))) * size * size *
               (d == 0 ? Rational(1) : volume) -
           size + 1;
}

RationalInterval log_product_interval(std::int64_t n, unsigned bits) {
    if (n < 1)
        throw std::domain_error("log_product_interval: n must be >= 1");
    // Empty product for n = 1 (documented convention).
    RationalInterval acc{Rational(1), Rational(1), bits};
    if (n == 1)
        return acc;
    for (std::int64_t p : primes_upto(n).primes) {
        RationalInterval f = log_base_interval(n, p, bits);
        // All factors are >= 1, so endpoint products bracket exactly.
        acc.lo *= f.lo;
        acc.hi *= f.hi;
    }
    return acc;
}

RationalInterval explicit_threshold(std::int64_t n, unsigned bits) {
    if (n < 1)
        throw std::domain_error("explicit_threshold: n must be >= 1");
    RationalInterval logs = log_product_interval(n, bits);
    Rational nn(static_cast<long>(n));
    Rational shift = Rational(1) - nn; // - n + 1
    return {nn * nn * logs.lo + shift, nn * nn * logs.hi + shift, bits};
}

RationalInterval volume_upper_bound(std::int64_t n, unsigned bits) {
    RationalInterval logs = log_product_interval(n, bits);
    int d = primes_upto(n).dim();
    Rational scale =
        make_rational(BigInt(1), factorial(static_cast<unsigned>(d)));
    return {scale * logs.lo, scale * logs.hi, bits};
}

DecideResult
decide_leq(const Rational &value,
           const std::function<RationalInterval(unsigned)> &enclose,
           unsigned start_bits, unsigned max_bits) {
    for (unsigned bits = start_bits;; bits *= 2) {
        RationalInterval iv = enclose(bits);
        if (value <= iv.lo)
            return {true, iv};
        if (value > iv.hi)
            return {false, iv};
        if (bits >= max_bits)
            throw guard_error("interval comparison inconclusive at " +
                              std::to_string(max_bits) + " bits");
    }
}

ThresholdReport threshold_report(std::int64_t n, std::int64_t kmax) {
    if (n < 1 || kmax < 1)
        throw std::domain_error("threshold_report: n and kmax must be >= 1");
    GrowthSequence growth = growth_sequence(build_mn(n), kmax);
    growth.n = n;
    return threshold_report_from(n, growth, ehrhart(qn_spec(n)).volume);
}

ThresholdReport threshold_report_from(std::int64_t n,
                                      const GrowthSequence &growth,
                                      const Rational &volume) {
    if (n < 1 || growth.kmax() < 1)
        throw std::domain_error("threshold_report: n and kmax must be >= 1");
    ThresholdReport rep;
    rep.n = n;
    rep.kmax = growth.kmax();

    rep.d = primes_upto(n).dim();
    rep.volume = volume;
    rep.gsw_exact = gsw_bound(n, rep.d, rep.volume);

    rep.growth = growth;
    rep.growth.n = n;
    const int window = rep.d + 2;
    if (rep.kmax + 1 >= rep.d + 1 + window)
        rep.stabilization = detect_stabilization(rep.growth, rep.d, window);

    auto explicit_fn = [n](unsigned bits) { return explicit_threshold(n, bits); };
    auto volbound = [n](unsigned bits) { return volume_upper_bound(n, bits); };

    DecideResult gsw_cmp = decide_leq(rep.gsw_exact, explicit_fn);
    rep.gsw_le_explicit = gsw_cmp.leq;
    rep.explicit_bound = gsw_cmp.interval;
    rep.explicit_ceil = rational_ceil(rep.explicit_bound.hi);

    DecideResult vol_cmp = decide_leq(rep.volume, volbound);
    rep.volume_le_bound = vol_cmp.leq;
    rep.volume_bound = vol_cmp.interval;

    if (rep.stabilization)
        rep.empirical_le_explicit_ceil =
            BigInt(rep.stabilization->threshold) <= rep.explicit_ceil;
    return rep;
}

} // namespace khovlab
