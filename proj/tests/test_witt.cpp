#include "doctest.h"

#include "kmilnor/scalars.hpp"
#include "kmilnor/witt.hpp"
#include "oracles.hpp"

using namespace kmil;

namespace {

template <class K>
WittVector<K> W(const K& k, int m, const std::string& s)
{
    return WittVector<K>(parse_series(k, m + 1, s));
}

template <class K>
WittVector<K> random_witt(oracle::Rng& r, const K& k, int m)
{
    TruncSeries<K> s(k, m + 1);
    s.c[0] = k.one();
    for (int i = 1; i <= m; ++i) s.c[i] = k.from_int(oracle::uniform(r, -9, 9));
    return WittVector<K>(s);
}

} // namespace

TEST_CASE("witt_add")
{
    RationalField Q;
    PrimeField F2(2);
    CHECK(witt_add(W(Q, 2, "1-t"), W(Q, 2, "1+t")).str() == "1-t^2");
    auto x = W(Q, 4, "1+3*t-t^4");
    CHECK(witt_add(x, WittVector<RationalField>::zero(Q, 4)) == x);
    CHECK(witt_add(W(F2, 2, "1-t"), W(F2, 2, "1-t")).str() == "1+t^2");
}

TEST_CASE("witt_factor")
{
    RationalField Q;
    auto a = witt_factor(W(Q, 3, "1-t"));
    CHECK(a == std::vector<mpq_class>{1, 0, 0});
    CHECK(witt_factor(W(Q, 3, "1+t")) == std::vector<mpq_class>{-1, 0, 0});
    CHECK(witt_factor(W(Q, 2, "1+t+t^2")) == std::vector<mpq_class>{-1, -1});
    // reconstruction by hand: (1+t)(1+t^2) = 1+t+t^2+t^3
    CHECK(truncate(parse_local(Q, "(1+t)*(1+t^2)"), 3) == parse_series(Q, 3, "1+t+t^2"));
}

TEST_CASE("witt_star")
{
    PrimeField F5(5);
    RationalField Q;
    auto r = witt_star(W(F5, 3, "1-2*t"), W(F5, 3, "1-3*t"));
    CHECK(r.str() == "1+4*t");
    CHECK(witt_star(W(Q, 6, "1-t^2"), W(Q, 6, "1-t^2")).str() == "1-2*t^2+t^4");
    oracle::Rng rng(3);
    for (int it = 0; it < 20; ++it) {
        auto x = random_witt(rng, Q, 5);
        CHECK(witt_star(x, WittVector<RationalField>::one(Q, 5)) == x);
    }
}

TEST_CASE("ghost")
{
    RationalField Q;
    auto g = ghost(W(Q, 3, "1-5*t"));
    CHECK(g == std::vector<mpq_class>{5, 25, 125});
    CHECK(ghost(W(Q, 4, "1-t^2")) == std::vector<mpq_class>{0, 2, 0, 2});
    CHECK(ghost(WittVector<RationalField>::zero(Q, 3)) == std::vector<mpq_class>{0, 0, 0});
    PrimeField F3(3);
    try {
        ghost(W(F3, 5, "1+t"));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::GhostUndefined);
    }
}

TEST_CASE("ghost matches logarithmic derivative independently")
{
    RationalField Q;
    oracle::Rng rng(8);
    for (int it = 0; it < 20; ++it) {
        int m = 6;
        auto x = random_witt(rng, Q, m);
        auto g = ghost(x);
        // -t s'/s computed by hand with the recursion s * w = -t s'
        std::vector<mpq_class> w(m + 1, 0);
        for (int n = 1; n <= m; ++n) {
            mpq_class v = -n * x.s.c[n];
            for (int j = 1; j < n; ++j) v -= w[j] * x.s.c[n - j];
            w[n] = v;
        }
        for (int n = 1; n <= m; ++n) CHECK(g[n - 1] == w[n]);
    }
}

TEST_CASE("vanishing_level")
{
    RationalField Q;
    CHECK(vanishing_level(W(Q, 4, "1+t^3")) == 3);
    CHECK(vanishing_level(WittVector<RationalField>::zero(Q, 4)) == 5);
    CHECK(vanishing_level(W(Q, 4, "1-t")) == 1);
}

TEST_CASE("star ring axioms and ideal property")
{
    for (uint64_t p : {2, 3, 5, 7}) {
        PrimeField F(p);
        oracle::Rng rng(p);
        for (int it = 0; it < 15; ++it) {
            int m = 1 + static_cast<int>(it % 8);
            auto x = random_witt(rng, F, m), y = random_witt(rng, F, m), z = random_witt(rng, F, m);
            CHECK(witt_star(x, y) == witt_star(y, x));
            CHECK(witt_star(witt_star(x, y), z) == witt_star(x, witt_star(y, z)));
            CHECK(witt_star(x, witt_add(y, z)) == witt_add(witt_star(x, y), witt_star(x, z)));
            CHECK(witt_star(x, WittVector<PrimeField>::one(F, m)) == x);
            CHECK(witt_from_factors(F, m, witt_factor(x)) == x);
            CHECK(vanishing_level(witt_star(x, y)) >= vanishing_level(y));
        }
    }
}
