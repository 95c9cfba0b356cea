#ifndef KMILNOR_IRREDUCIBLE_HPP
#define KMILNOR_IRREDUCIBLE_HPP

#include <vector>

#include "kmilnor/poly.hpp"

namespace kmil {

namespace detail {

template <class K>
Poly<K> powmod(Poly<K> b, uint64_t e, const Poly<K>& m)
{
    Poly<K> r = Poly<K>::from_int(b.k, 1) % m;
    b = b % m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        e >>= 1;
        if (e) b = (b * b) % m;
    }
    return r;
}

inline std::vector<int> prime_divisors(int n)
{
    std::vector<int> out;
    for (int q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::vector<mpz_class> divisors(const mpz_class& v)
{
    mpz_class a = abs(v);
    if (a == 0) return {};
    if (a > mpz_class("1000000000000")) fail(Errc::Unsupported, "constant term too large for the rational irreducibility test");
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(d);
        if (d * d != a) out.push_back(a / d);
    }
    return out;
}

} // namespace detail

// Rabin's irreducibility test over F_p.
inline bool is_irreducible(const Poly<PrimeField>& g0)
{
    if (g0.deg() < 1) return false;
    Poly<PrimeField> g = g0.monic();
    int n = g.deg();
    if (n == 1) return true;
    const PrimeField& k = g.k;
    auto X = Poly<PrimeField>::x(k);
    auto frob = [&](int times) {
        Poly<PrimeField> r = X % g;
        for (int i = 0; i < times; ++i) r = detail::powmod(r, k.p, g);
        return r;
    };
    if (frob(n) != X % g) return false;
    for (int q : detail::prime_divisors(n)) {
        Poly<PrimeField> h = frob(n / q) - X;
        if (!Poly<PrimeField>::gcd(g, h).is_one()) return false;
    }
    return true;
}

// Exact test over Q for degree <= 4 (integer roots, then quadratic splittings).
inline bool is_irreducible(const Poly<RationalField>& g0)
{
    if (g0.deg() < 1) return false;
    Poly<RationalField> g = g0.monic();
    int n = g.deg();
    if (n == 1) return true;
    if (n > 4) fail(Errc::Unsupported, "irreducibility over Q is implemented for degree <= 4");
    mpz_class L = 1;
    for (const auto& c : g.c) L = lcm(L, c.get_den());
    // h(y) = L^n g(y/L) is monic with integer coefficients
    std::vector<mpz_class> h(n + 1);
    mpz_class pw = 1;
    for (int i = n; i >= 0; --i) {
        mpq_class v = g.c[i] * pw;
        h[i] = v.get_num();
        pw *= L;
    }
    auto evalh = [&](const mpz_class& y) {
        mpz_class r = 0;
        for (int i = n; i >= 0; --i) r = r * y + h[i];
        return r;
    };
    if (h[0] == 0) return false;
    for (const auto& d : detail::divisors(h[0]))
        if (evalh(d) == 0 || evalh(-d) == 0) return false;
    if (n < 4) return true;
    // (y^2 + a y + b)(y^2 + c y + e): b e = h0, a + c = h3, b + e + a c = h2, a e + b c = h1
    for (const auto& d0 : detail::divisors(h[0])) {
        for (int s : {1, -1}) {
            mpz_class b = d0 * s;
            mpz_class e = h[0] / b;
            mpz_class sum = h[3], prod = h[2] - b - e;
            mpz_class disc = sum * sum - 4 * prod;
            if (disc < 0) continue;
            mpz_class r = sqrt(disc);
            if (r * r != disc) continue;
            for (int sg : {1, -1}) {
                mpz_class twice_a = sum + sg * r;
                if (twice_a % 2 != 0) continue;
                mpz_class a = twice_a / 2, c = sum - a;
                if (a * e + b * c == h[1]) return false;
            }
        }
    }
    return true;
}

} // namespace kmil

#endif
