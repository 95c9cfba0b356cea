#include "doctest.h"

#include "kmilnor/scalars.hpp"
#include "oracles.hpp"

using namespace kmil;

TEST_CASE("local scalars normalize")
{
    RationalField Q;
    CHECK(parse_local(Q, "(t^2+t)/(1+t)").str() == "t");
    auto a = parse_local(Q, "3+t^2");
    CHECK(a * RatFn<RationalField>::from_int(Q, 1) == a);
    CHECK_THROWS_AS(local_div(a, parse_local(Q, "t")), Error);
    try {
        local_div(a, parse_local(Q, "t"));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DivisionByNonUnit);
    }
    CHECK_THROWS(parse_local(Q, "1/t"));
}

TEST_CASE("truncate")
{
    RationalField Q;
    CHECK(truncate(parse_local(Q, "1/(1-t)"), 3).str() == "1+t+t^2");
    CHECK(truncate(parse_local(Q, "t"), 1).is_zero());
    auto s = truncate(parse_local(Q, "(1+t)/(1-t)"), 3);
    CHECK(s.str() == "1+2*t+2*t^2");
    // independent check: s * (1 - t) == 1 + t mod t^3
    CHECK(oracle::series_mul(s.c, {1, -1}, 3, Q) == std::vector<mpq_class>{1, 1, 0});
}

TEST_CASE("series arithmetic")
{
    RationalField Q;
    PrimeField F5(5), F2(2);
    CHECK((parse_series(Q, 3, "1+t") * parse_series(Q, 3, "1-t")).str() == "1-t^2");
    CHECK(parse_series(F5, 2, "2").inv().str() == "3");
    CHECK(parse_series(F2, 3, "(1+t)^2").str() == "1+t^2");
    try {
        parse_series(F5, 2, "t").inv();
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonUnit);
    }
}

TEST_CASE("truncation is a ring homomorphism on units")
{
    PrimeField F7(7);
    oracle::Rng rng(11);
    for (int it = 0; it < 50; ++it) {
        auto a = oracle::random_unit(rng, F7, 3);
        auto b = oracle::random_unit(rng, F7, 3);
        for (int N = 1; N <= 5; ++N) {
            CHECK(truncate(a * b, N) == truncate(a, N) * truncate(b, N));
            auto s = truncate(a, N);
            CHECK((s * s.inv()).is_one());
        }
    }
}

TEST_CASE("local equality agrees with cross multiplication")
{
    RationalField Q;
    oracle::Rng rng(5);
    for (int it = 0; it < 30; ++it) {
        auto n1 = oracle::random_poly(rng, Q, 3), d1 = oracle::random_poly(rng, Q, 2);
        auto c = oracle::random_poly(rng, Q, 2);
        if (d1.is_zero() || c.is_zero()) continue;
        RatFn<RationalField> a(n1, d1), b(n1 * c, d1 * c);
        CHECK(a == b);
        CHECK(a.num * b.den == b.num * a.den);
    }
}

TEST_CASE("fraction arithmetic agrees with normalizing the naive formulas")
{
    oracle::Rng rng(11);
    auto run = [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        for (int it = 0; it < 200; ++it) {
            // shared factors in the denominators exercise the gcd paths
            auto common = oracle::random_poly(rng, k, 1 + static_cast<int>(oracle::uniform(rng, 0, 1)));
            if (common.is_zero()) continue;
            auto d1 = oracle::random_poly(rng, k, 2) * common, d2 = oracle::random_poly(rng, k, 1) * common;
            auto n1 = oracle::random_poly(rng, k, 3), n2 = oracle::random_poly(rng, k, 3);
            if (d1.is_zero() || d2.is_zero()) continue;
            RatFn<K> a(n1, d1), b(n2, d2);
            CHECK(a + b == RatFn<K>(n1 * d2 + n2 * d1, d1 * d2));
            CHECK(a - b == RatFn<K>(n1 * d2 - n2 * d1, d1 * d2));
            CHECK(a * b == RatFn<K>(n1 * n2, d1 * d2));
            auto s = a + b;
            CHECK(Poly<K>::gcd(s.num, s.den).is_one());
            CHECK(k.is_one(s.den.lc()));
        }
    };
    run(RationalField());
    run(PrimeField(7));
    run(PrimeField(2147483647ULL));
}

TEST_CASE("prime field inverse")
{
    for (uint64_t p : {2ULL, 3ULL, 101ULL, 2147483647ULL, 2305843009213693951ULL}) {
        PrimeField F(p);
        oracle::Rng rng(p);
        for (int it = 0; it < 100; ++it) {
            uint64_t a = 1 + std::uniform_int_distribution<uint64_t>(0, p - 2)(rng);
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.inv(a) == F.pow(a, p - 2));
        }
    }
}
