#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "khovlab/lattice.hpp"
#include "khovlab/polynomial.hpp"
#include "khovlab/sumset.hpp"

using namespace khovlab;

namespace {

RationalPolynomial poly(std::vector<long> cs) {
    std::vector<Rational> rs;
    for (long c : cs)
        rs.emplace_back(c);
    return RationalPolynomial(std::move(rs));
}

} // namespace

TEST_CASE("polynomial representation") {
    RationalPolynomial p(
        {Rational(1), Rational(2), Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 2);
    CHECK(p.coefficients().size() == 3); // trailing zeros stripped
    CHECK(p(Rational(3)) == 16);
    CHECK(p.to_string() == "t^2 + 2t + 1");
    CHECK(make_rational(1, 2) == Rational(1, 2));
    RationalPolynomial half({make_rational(1, 1), make_rational(3, 2),
                             make_rational(1, 2)});
    CHECK(half.to_string() == "(1/2)t^2 + (3/2)t + 1");
    CHECK(RationalPolynomial{}.to_string() == "0");
    CHECK(RationalPolynomial{}.degree() == -1);
}

TEST_CASE("newton_interpolate examples") {
    CHECK(newton_interpolate({{0, Rational(1)}, {1, Rational(2)}}) ==
          poly({1, 1}));
    CHECK(newton_interpolate(
              {{0, Rational(1)}, {1, Rational(4)}, {2, Rational(9)}}) ==
          poly({1, 2, 1}));
    // p(k,3) values 1, 3, 6 -> (t+1)(t+2)/2
    RationalPolynomial q = newton_interpolate(
        {{0, Rational(1)}, {1, Rational(3)}, {2, Rational(6)}});
    CHECK(q == RationalPolynomial({Rational(1), make_rational(3, 2),
                                   make_rational(1, 2)}));
    CHECK_THROWS_AS(
        newton_interpolate({{1, Rational(1)}, {1, Rational(2)}}),
        std::invalid_argument);
}

TEST_CASE("newton_interpolate reproduces inputs exactly") {
    std::mt19937_64 rng(0x1e57);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 9);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<std::pair<std::int64_t, Rational>> pts;
        int m = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < m; ++i)
            pts.emplace_back(3 * i - 5, make_rational(num(rng), den(rng)));
        RationalPolynomial p = newton_interpolate(pts);
        CHECK(p.degree() < m);
        for (const auto &[x, y] : pts)
            CHECK(p(Rational(static_cast<long>(x))) == y);
    }
}

TEST_CASE("finite_differences examples") {
    CHECK(finite_differences({1, 4, 9, 16, 25}, 3) ==
          std::vector<std::int64_t>{0, 0});
    CHECK(finite_differences({1, 2, 3}, 1) == std::vector<std::int64_t>{1, 1});
    CHECK(finite_differences({1, 5, 14, 30}, 2) ==
          std::vector<std::int64_t>{5, 7});
    CHECK_THROWS_AS(finite_differences({1, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(finite_differences({1, 2}, 0), std::invalid_argument);
}

TEST_CASE("detect_stabilization on closed forms") {
    GrowthSequence p4 = growth_sequence(build_mn(4), 10);
    auto s4 = detect_stabilization(p4, 2, 3);
    REQUIRE(s4.has_value());
    CHECK(s4->threshold == 0);
    CHECK(s4->polynomial == poly({1, 2, 1}));
    CHECK(s4->confirmed_upto == 10);

    GrowthSequence p2 = growth_sequence(build_mn(2), 10);
    auto s2 = detect_stabilization(p2, 1, 3);
    REQUIRE(s2.has_value());
    CHECK(s2->threshold == 0);
    CHECK(s2->polynomial == poly({1, 1}));

    GrowthSequence p1 = growth_sequence(build_mn(1), 5);
    auto s1 = detect_stabilization(p1, 0, 2);
    REQUIRE(s1.has_value());
    CHECK(s1->threshold == 0);
    CHECK(s1->polynomial == poly({1}));

    CHECK_THROWS_AS(detect_stabilization(p1, 3, 3), std::invalid_argument);
}

TEST_CASE("detect_stabilization finds a late threshold and stays minimal") {
    // Polynomial from index 2 on, garbage before.
    GrowthSequence seq;
    seq.values = {7, 100, 9, 16, 25, 36, 49, 64, 81};
    auto s = detect_stabilization(seq, 2, 3);
    REQUIRE(s.has_value());
    CHECK(s->threshold == 2);
    CHECK(s->polynomial(Rational(2)) == 9);
    CHECK(s->polynomial(Rational(8)) == 81);
    // minimality: the fit does not extend one step left
    CHECK(s->polynomial(Rational(1)) != 100);

    // No stabilization: strictly exponential growth.
    GrowthSequence bad;
    bad.values = {1, 2, 4, 8, 16, 32, 64, 128, 256, 512};
    CHECK_FALSE(detect_stabilization(bad, 2, 3).has_value());
}

TEST_CASE("window gates confirmation") {
    // Quadratic tail starts at index 3; with window 3 the data barely
    // suffices at kmax = 8, and fails for window 4.
    GrowthSequence seq;
    seq.values = {5, 5, 5, 16, 25, 36, 49, 64, 81};
    CHECK(detect_stabilization(seq, 2, 3).has_value());
    CHECK_FALSE(detect_stabilization(seq, 2, 4).has_value());
}

TEST_CASE("binomial basis coordinates are integral for counting polynomials") {
    GrowthSequence p3 = growth_sequence(build_mn(3), 10);
    auto s = detect_stabilization(p3, 2, 3);
    REQUIRE(s.has_value());
    auto bc = s->binomial_coefficients();
    REQUIRE(bc.size() == 3);
    // (t+1)(t+2)/2 = 1 + 2 C(t,1) + 1 C(t,2)
    CHECK(bc[0] == 1);
    CHECK(bc[1] == 2);
    CHECK(bc[2] == 1);
    for (const auto &c : bc)
        CHECK(c.get_den() == 1);
}
