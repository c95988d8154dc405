#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "khovlab/bounds.hpp"
#include "khovlab/errors.hpp"
#include "khovlab/lattice.hpp"
#include "khovlab/numeric.hpp"

using namespace khovlab;

namespace {

// Independent enclosure of log_p(n) at denominator b, certified by exact
// bigint powers: p^a <= n^b < p^(a+1) pins log_p(n) into [a/b, (a+1)/b].
std::pair<Rational, Rational> log_oracle(long n, long p, unsigned long b) {
    BigInt nb = power(BigInt(n), b);
    auto a = static_cast<unsigned long>(
        static_cast<double>(b) * std::log2(n) / std::log2(p));
    BigInt pa = power(BigInt(p), a);
    while (pa > nb) {
        pa /= p;
        --a;
    }
    while (pa * p <= nb) {
        pa *= p;
        ++a;
    }
    REQUIRE(power(BigInt(p), a) <= nb);
    REQUIRE(power(BigInt(p), a + 1) > nb);
    BigInt den(static_cast<long>(b));
    return {make_rational(BigInt(static_cast<long>(a)), den),
            make_rational(BigInt(static_cast<long>(a + 1)), den)};
}

// Product of the per-prime oracle enclosures for n.
std::pair<Rational, Rational> log_product_oracle(long n, unsigned long b) {
    Rational lo(1), hi(1);
    for (std::int64_t p : primes_upto(n).primes) {
        auto [flo, fhi] = log_oracle(n, static_cast<long>(p), b);
        lo *= flo;
        hi *= fhi;
    }
    return {lo, hi};
}

Rational pow2_inv(unsigned k) { // 2^-k
    return make_rational(BigInt(1), power(BigInt(2), k));
}

} // namespace

TEST_CASE("gsw_bound") {
    CHECK(gsw_bound(2, 1, Rational(1)) == 3);
    CHECK(gsw_bound(4, 2, Rational(1)) == 29);
    CHECK(gsw_bound(1, 0, Rational(1)) == 1);
    CHECK(gsw_bound(5, 3, make_rational(1, 3)) == 46); // 6*25/3 - 5 + 1
    CHECK_THROWS_AS(gsw_bound(0, 1, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(gsw_bound(3, 2, Rational(0)), std::domain_error);
}

TEST_CASE("log_product_interval exact cases") {
    RationalInterval two = log_product_interval(2, 64);
    CHECK(two.is_point());
    CHECK(two.lo == 1);
    RationalInterval one = log_product_interval(1, 64);
    CHECK(one.is_point());
    CHECK(one.lo == 1);
}

TEST_CASE("log_product_interval encloses tightly") {
    RationalInterval i4 = log_product_interval(4, 64);
    CHECK(i4.lo <= i4.hi);
    CHECK(i4.hi - i4.lo < pow2_inv(50));
    // around 2 * log_3(4) = 2.52371...
    CHECK(i4.lo > make_rational(25237, 10000));
    CHECK(i4.hi < make_rational(25238, 10000));

    RationalInterval i9 = log_product_interval(9, 64);
    CHECK(i9.hi - i9.lo < pow2_inv(48));
    CHECK(i9.lo > make_rational(977, 100));
    CHECK(i9.hi < make_rational(978, 100));
}

TEST_CASE("intervals are consistent with the bigint power oracle") {
    const unsigned long b = 4096;
    for (long n : {4L, 6L, 9L, 10L, 12L, 15L}) {
        auto [olo, ohi] = log_product_oracle(n, b);
        RationalInterval impl = log_product_interval(n, 64);
        // Two enclosures of the same number must overlap, and the tight one
        // must stay within the coarse one up to its own width.
        CHECK(impl.lo <= ohi);
        CHECK(impl.hi >= olo);
        CHECK(impl.lo >= olo - (impl.hi - impl.lo));
        CHECK(impl.hi <= ohi + (impl.hi - impl.lo));
    }
}

TEST_CASE("higher precision nests inside lower precision") {
    for (long n : {4L, 9L, 14L}) {
        RationalInterval a = log_product_interval(n, 64);
        RationalInterval b = log_product_interval(n, 128);
        RationalInterval c = log_product_interval(n, 256);
        CHECK(b.lo >= a.lo);
        CHECK(b.hi <= a.hi);
        CHECK(c.lo >= b.lo);
        CHECK(c.hi <= b.hi);
    }
}

TEST_CASE("explicit_threshold") {
    RationalInterval t2 = explicit_threshold(2);
    CHECK(t2.is_point());
    CHECK(t2.lo == 3);

    RationalInterval t1 = explicit_threshold(1);
    CHECK(t1.is_point());
    CHECK(t1.lo == 1);

    RationalInterval t4 = explicit_threshold(4);
    CHECK(t4.lo > make_rational(3737, 100));
    CHECK(t4.hi < make_rational(3739, 100));
    CHECK(rational_ceil(t4.hi) == 38);
}

TEST_CASE("decide_leq escalates until conclusive") {
    RationalInterval coarse = log_product_interval(6, 64);
    RationalInterval fine = log_product_interval(6, 256);
    auto enclose = [](unsigned bits) { return log_product_interval(6, bits); };

    // fine.hi is above the true value but inside the 64-bit bracket, so the
    // comparison must escalate before answering "no".
    REQUIRE(fine.hi > coarse.lo);
    REQUIRE(fine.hi < coarse.hi);
    DecideResult no = decide_leq(fine.hi, enclose);
    CHECK_FALSE(no.leq);
    CHECK(no.interval.bits > 64);

    DecideResult yes = decide_leq(fine.lo, enclose);
    CHECK(yes.leq);

    // An enclosure that never shrinks exhausts the precision ladder.
    auto stuck = [](unsigned bits) {
        return RationalInterval{Rational(0), Rational(1), bits};
    };
    CHECK_THROWS_AS(decide_leq(make_rational(1, 2), stuck),
                    guard_error);
}

TEST_CASE("threshold_report n=4") {
    ThresholdReport rep = threshold_report(4, 12);
    CHECK(rep.d == 2);
    CHECK(rep.gsw_exact == 29);
    CHECK(rep.explicit_ceil == 38);
    CHECK(rep.volume == 1);
    REQUIRE(rep.stabilization.has_value());
    CHECK(rep.stabilization->threshold == 0);
    CHECK(rep.gsw_le_explicit);
    CHECK(rep.volume_le_bound);
    CHECK(rep.empirical_le_explicit_ceil == true);
    CHECK(rep.all_pass());
}

TEST_CASE("threshold_report n=2 hits the exact boundary") {
    ThresholdReport rep = threshold_report(2, 8);
    CHECK(rep.gsw_exact == 3);
    CHECK(rep.explicit_bound.is_point());
    CHECK(rep.explicit_bound.lo == 3);
    CHECK(rep.volume == 1);
    CHECK(rep.volume_bound.is_point());
    CHECK(rep.volume_bound.lo == 1);
    REQUIRE(rep.stabilization.has_value());
    CHECK(rep.stabilization->threshold == 0);
    CHECK(rep.all_pass());
}

TEST_CASE("threshold_report n=1 degenerates cleanly") {
    ThresholdReport rep = threshold_report(1, 3);
    CHECK(rep.d == 0);
    CHECK(rep.volume == 1);
    CHECK(rep.gsw_exact == 1);
    CHECK(rep.explicit_bound.is_point());
    CHECK(rep.explicit_bound.lo == 1);
    REQUIRE(rep.stabilization.has_value());
    CHECK(rep.stabilization->polynomial ==
          RationalPolynomial({Rational(1)}));
    CHECK(rep.all_pass());
}

TEST_CASE("threshold_report flags missing empirical data") {
    ThresholdReport rep = threshold_report(10, 3); // kmax far too small
    CHECK_FALSE(rep.empirical_available());
    CHECK_FALSE(rep.empirical_le_explicit_ceil.has_value());
    CHECK(rep.gsw_le_explicit);
    CHECK(rep.volume_le_bound);
}
