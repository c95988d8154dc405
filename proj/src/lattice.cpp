#include "khovlab/lattice.hpp"

#include <stdexcept>

#include "khovlab/errors.hpp"

namespace khovlab {

namespace {
constexpr std::int64_t kSieveLimit = 2'000'000;
}

PrimeBasis primes_upto(std::int64_t n) {
    if (n < 1)
        throw std::domain_error("primes_upto: n must be >= 1");
    if (n > kSieveLimit)
        throw guard_error("primes_upto: n beyond sieve guard");

    PrimeBasis basis;
    basis.n = n;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t p = 2; p <= n; ++p) {
        if (composite[static_cast<std::size_t>(p)])
            continue;
        basis.primes.push_back(p);
        for (std::int64_t q = p * p; q <= n; q += p)
            composite[static_cast<std::size_t>(q)] = true;
    }
    return basis;
}

ExponentVector factor_vector(const BigInt &m, const PrimeBasis &basis) {
    if (m < 1)
        throw std::domain_error("factor_vector: m must be >= 1");
    ExponentVector v(basis.primes.size(), 0);
    BigInt rest = m;
    for (std::size_t j = 0; j < basis.primes.size(); ++j) {
        BigInt p(static_cast<long>(basis.primes[j]));
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++v[j];
        }
    }
    if (rest != 1)
        throw std::domain_error("factor_vector: " + m.get_str() +
                                " has a prime factor outside the basis");
    return v;
}

BigInt vector_value(const ExponentVector &v, const PrimeBasis &basis) {
    if (v.size() != basis.primes.size())
        throw dimension_error("vector_value: length mismatch");
    BigInt value = 1;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] < 0)
            throw std::domain_error("vector_value: negative exponent");
        value *= power(BigInt(static_cast<long>(basis.primes[j])),
                       static_cast<unsigned long>(v[j]));
    }
    return value;
}

PointSet build_mn(std::int64_t n) {
    PrimeBasis basis = primes_upto(n);
    PointSetBuilder b(basis.dim());
    b.reserve(static_cast<std::size_t>(n));
    for (std::int64_t m = 1; m <= n; ++m)
        b.insert(factor_vector(BigInt(static_cast<long>(m)), basis));
    return b.finish();
}

} // namespace khovlab
