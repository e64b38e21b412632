#include <doctest.h>

#include "grunit/rings.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace grunit;

namespace {

oracle::Bivariate to_oracle(const CycloBivariate& x) {
    oracle::Bivariate out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (x.coeff(i, j)) out[{i, j}] = x.coeff(i, j);
    return out;
}

oracle::Univariate to_oracle(const CyclotomicZeta8& x) {
    oracle::Univariate out;
    for (int k = 0; k < 4; ++k)
        if (x.coeff(k)) out[k] = x.coeff(k);
    return out;
}

template <class K, class G>
void check_ring_axioms(G&& draw, int trials) {
    for (int t = 0; t < trials; ++t) {
        const K a = draw(), b = draw(), c = draw();
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a + (-a) == a.scalar(0));
        CHECK(a * a.scalar(1) == a);
    }
}

}  // namespace

TEST_CASE("R arithmetic examples") {
    const auto s = CycloBivariate::s();
    CHECK(CycloBivariate::monomial(1, 2, 0) * CycloBivariate::monomial(1, 3, 0) == -s);
    const auto one = CycloBivariate(1);
    CHECK((one + s) * (one - s) == one - s * s);
    CHECK(CycloBivariate::monomial(1, 4, 0) == CycloBivariate(-1));
    CHECK(CycloBivariate::monomial(1, -1, 0) == CycloBivariate::monomial(-1, 3, 0));
    CHECK(s.to_string() == "s");
    CHECK(CycloBivariate::monomial(-1, 2, 1).to_string() == "-s^2*t");
    CHECK(CycloBivariate().to_string() == "0");
    CHECK(s.inverse() * s == one);
    CHECK_THROWS_AS(CycloBivariate(2).inverse(), std::domain_error);
}

TEST_CASE("property: R multiplication matches the polynomial oracle") {
    gen::Rng rng(21);
    for (int t = 0; t < 500; ++t) {
        const auto a = gen::cyclo(rng), b = gen::cyclo(rng);
        CHECK(to_oracle(a * b) == oracle::mul(to_oracle(a), to_oracle(b)));
        CHECK(to_oracle(a + b) == oracle::add(to_oracle(a), to_oracle(b)));
    }
}

TEST_CASE("property: ring axioms") {
    gen::Rng rng(22);
    check_ring_axioms<CycloBivariate>([&] { return gen::cyclo(rng); }, 1000);
    check_ring_axioms<CyclotomicZeta8>([&] { return gen::zeta8(rng); }, 1000);
    check_ring_axioms<GaussianInt>([&] { return gen::gaussian(rng); }, 1000);
    check_ring_axioms<PrimeField>([&] { return gen::prime_field(rng, 1000000007); }, 1000);
    check_ring_axioms<PrimeField>([&] { return gen::prime_field(rng, 2); }, 200);
    const auto m49 = std::get<QuadExtField>(find_eighth_root(7).root).modulus();
    check_ring_axioms<QuadExtField>([&] { return gen::quad(rng, m49); }, 1000);
}

TEST_CASE("property: zeta8 multiplication matches the oracle") {
    gen::Rng rng(23);
    for (int t = 0; t < 500; ++t) {
        const auto a = gen::zeta8(rng), b = gen::zeta8(rng);
        CHECK(to_oracle(a * b) == oracle::mul(to_oracle(a), to_oracle(b)));
    }
    const auto z = CyclotomicZeta8::zeta();
    CHECK(ring_pow(z, 4) == CyclotomicZeta8(-1));
    CHECK(ring_pow(z, 8).is_one());
    CHECK(ring_pow(z, -1) * z == CyclotomicZeta8(1));
}

TEST_CASE("conjugation on R") {
    const auto s = CycloBivariate::s();
    CHECK(conj_R(s) == CycloBivariate::monomial(-1, 3, 0));
    CHECK(s * conj_R(s) == CycloBivariate(1));
    CHECK(conj_R(s * s) == CycloBivariate::monomial(-1, 2, 0));
    gen::Rng rng(24);
    for (int t = 0; t < 300; ++t) {
        const auto a = gen::cyclo(rng), b = gen::cyclo(rng);
        CHECK(conj_R(conj_R(a)) == a);
        CHECK(conj_R(a * b) == conj_R(a) * conj_R(b));
        CHECK(conj_R(a + b) == conj_R(a) + conj_R(b));
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const auto m = CycloBivariate::monomial(1, i, j);
            // s^2 t^2 is fixed because s^4 t^4 = 1
            CHECK((conj_R(m) == m) == ((i == 0 && j == 0) || (i == 2 && j == 2)));
        }
    CHECK(conj_gaussian(GaussianInt(2, 3)) == GaussianInt(2, -3));
    CHECK(conj_zeta8(CyclotomicZeta8::zeta()) * CyclotomicZeta8::zeta() == CyclotomicZeta8(1));
}

TEST_CASE("Gaussian integers") {
    const auto i = GaussianInt::iota();
    CHECK(i * i == GaussianInt(-1));
    CHECK(GaussianInt::iota_pow(3) == GaussianInt(0, -1));
    CHECK(GaussianInt::iota_pow(-1) == GaussianInt(0, -1));
    CHECK(i.inverse() == GaussianInt(0, -1));
    CHECK_THROWS_AS(GaussianInt(1, 1).inverse(), std::domain_error);
    CHECK(i.to_string() == "i");
}

TEST_CASE("prime fields") {
    CHECK(ring_pow(PrimeField(17, 2), 4) == PrimeField(17, -1));
    CHECK(PrimeField(17, -1).value() == 16);
    CHECK(PrimeField(17, 3).inverse() * PrimeField(17, 3) == PrimeField(17, 1));
    CHECK_THROWS_AS(PrimeField(15, 1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(17, 1) + PrimeField(19, 1), RingMismatchError);
    CHECK_THROWS(PrimeField(17, 0).inverse());
    for (long long n = 0; n < 2000; ++n) CHECK(is_prime(static_cast<std::uint64_t>(n)) == oracle::is_prime_trial(n));
    CHECK(is_prime(1000000007));
    CHECK_FALSE(is_prime(1000000007ULL * 998244353ULL));
}

TEST_CASE("quadratic extensions") {
    CHECK_THROWS(QuadExtField::make_modulus(7, 1, 0));  // q^2 + 1 does not divide q^4 + 1
    CHECK_THROWS(QuadExtField::make_modulus(15, 1, 0));
    const auto m = std::get<QuadExtField>(find_eighth_root(7).root).modulus();
    const auto q = QuadExtField::generator(m);
    CHECK(is_eighth_root_of_minus_one(q));
    gen::Rng rng(25);
    for (int t = 0; t < 200; ++t) {
        const auto a = gen::quad(rng, m);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("eighth roots of -1") {
    const auto r2 = find_eighth_root(2);
    CHECK(r2.degree == 1);
    CHECK(r2.field_name() == "F_2");
    CHECK(std::get<PrimeField>(r2.root) == PrimeField(2, 1));
    const auto r17 = find_eighth_root(17);
    CHECK(r17.field_name() == "F_17");
    CHECK(std::get<PrimeField>(r17.root).value() == 2);
    const auto r7 = find_eighth_root(7);
    CHECK(r7.degree == 2);
    CHECK(r7.field_name() == "F_49");
    CHECK(oracle::smallest_eighth_root(7) == 0);
    CHECK_THROWS(find_eighth_root(9));

    for (long long p = 2; p < 200; ++p) {
        if (!oracle::is_prime_trial(p)) continue;
        const auto r = find_eighth_root(static_cast<std::uint64_t>(p));
        std::visit([](const auto& v) { CHECK(is_eighth_root_of_minus_one(v)); }, r.root);
        const long long brute = oracle::smallest_eighth_root(p);
        if (p == 2) continue;
        if (p % 8 == 1) {
            REQUIRE(r.degree == 1);
            CHECK(static_cast<long long>(std::get<PrimeField>(r.root).value()) == brute);
        } else {
            CHECK(brute == 0);
            CHECK(r.degree == 2);
        }
    }
}

TEST_CASE("square roots mod p") {
    for (long long p : {3LL, 5LL, 7LL, 13LL, 17LL, 97LL, 193LL}) {
        for (long long a = 0; a < p; ++a) {
            std::uint64_t r = 0;
            const bool found = sqrt_mod(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(p), r);
            long long brute = -1;
            for (long long x = 0; x < p && brute < 0; ++x)
                if (x * x % p == a) brute = x;
            CHECK(found == (brute >= 0));
            if (found) CHECK(static_cast<long long>(r) == brute);
        }
    }
}

TEST_CASE("specialization") {
    const auto q = CyclotomicZeta8::zeta();
    CHECK(specialize_R(CycloBivariate::monomial(1, 0, 2), q, q) == CyclotomicZeta8::monomial(1, 2));
    const PrimeField one2(2, 1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int sign : {1, -1}) CHECK(specialize_R(CycloBivariate::monomial(sign, i, j), one2, one2).is_one());
    CHECK_THROWS_AS(specialize_R(CycloBivariate::s(), GaussianInt(1), GaussianInt(1)), NotEighthRootError);

    gen::Rng rng(26);
    auto homomorphism = [&](const auto& root) {
        for (int t = 0; t < 500; ++t) {
            const auto a = gen::cyclo(rng), b = gen::cyclo(rng);
            CHECK(specialize_R(a * b, root, root) == specialize_R(a, root, root) * specialize_R(b, root, root));
            CHECK(specialize_R(a + b, root, root) == specialize_R(a, root, root) + specialize_R(b, root, root));
        }
    };
    homomorphism(q);
    homomorphism(one2);
    homomorphism(PrimeField(17, 2));
    homomorphism(std::get<QuadExtField>(find_eighth_root(7).root));
    CHECK(map_gaussian(GaussianInt(3, -2), CyclotomicZeta8::monomial(1, 2)) ==
          CyclotomicZeta8(3) + CyclotomicZeta8::monomial(-2, 2));
}

TEST_CASE("overflow is reported") {
    const CycloBivariate big(std::int64_t{1} << 62);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    CHECK_THROWS_AS(big + big, std::overflow_error);
}
