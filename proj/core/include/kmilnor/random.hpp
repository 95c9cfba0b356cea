#ifndef KMILNOR_RANDOM_HPP
#define KMILNOR_RANDOM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kmilnor/cycles.hpp"
#include "kmilnor/irreducible.hpp"
#include "kmilnor/witt.hpp"

namespace kmil {

// splitmix64; also used to fan a master seed out into per-case seeds.
struct SplitMix64 {
    uint64_t s;
    explicit SplitMix64(uint64_t seed) : s(seed) {}
    uint64_t next()
    {
        uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1))); }
};

inline uint64_t case_seed(uint64_t master, uint64_t index)
{
    SplitMix64 a(master);
    uint64_t base = a.next();
    SplitMix64 b(base ^ (index * 0xd1342543de82ef95ULL));
    return b.next();
}

inline PrimeField::Elem random_elem(SplitMix64& r, const PrimeField& k) { return r.below(k.p); }
inline RationalField::Elem random_elem(SplitMix64& r, const RationalField&)
{
    mpq_class v(r.range(-9, 9), r.range(1, 3));
    v.canonicalize();
    return v;
}

template <class K>
typename K::Elem random_nonzero(SplitMix64& r, const K& k)
{
    for (;;) {
        auto v = random_elem(r, k);
        if (!k.is_zero(v)) return v;
    }
}

template <class K>
Poly<K> random_poly(SplitMix64& r, const K& k, int deg)
{
    Poly<K> p(k);
    p.c.clear();
    for (int i = 0; i <= deg; ++i) p.c.push_back(random_elem(r, k));
    p.trim();
    return p;
}

// Unit of A; with_den adds a random unit denominator of degree 1.
template <class K>
RatFn<K> random_unit(SplitMix64& r, const K& k, int deg, bool with_den = false)
{
    Poly<K> n = random_poly(r, k, deg);
    if (n.c.empty()) n = Poly<K>::from_int(k, 1);
    n.c[0] = random_nonzero(r, k);
    if (!with_den) return RatFn<K>(n);
    Poly<K> d = random_poly(r, k, 1);
    if (d.c.empty()) d = Poly<K>::from_int(k, 1);
    d.c[0] = random_nonzero(r, k);
    return RatFn<K>(n, d);
}

// 1 + t^r * (random unit)
template <class K>
RatFn<K> random_one_unit(SplitMix64& r, const K& k, int rr, int deg)
{
    RatFn<K> u = random_unit(r, k, deg);
    return RatFn<K>::from_int(k, 1) + RatFn<K>(Poly<K>::monomial(k, k.one(), rr)) * u;
}

template <class K>
WittVector<K> random_witt(SplitMix64& r, const K& k, int m)
{
    TruncSeries<K> s(k, m + 1);
    s.c[0] = k.one();
    for (int i = 1; i <= m; ++i) s.c[i] = random_elem(r, k);
    return WittVector<K>(s);
}

template <class K>
El<K> random_alg_elem(SplitMix64& r, const Sys<K>& S, int l, int tdeg)
{
    El<K> e = alg::zero(S, l);
    for (auto& c : e) c = RatFn<K>(random_poly(r, S.proto.field(), tdeg));
    return e;
}

// Random admissible monic triangular system with n levels and degrees in 1..maxdeg.
template <class K>
Sys<K> random_admissible(SplitMix64& r, const K& k, int n, int maxdeg, int tdeg)
{
    Sys<K> S{RatFn<K>(k)};
    for (int l = 0; l < n; ++l) {
        int d = 1 + static_cast<int>(r.below(static_cast<uint64_t>(maxdeg)));
        std::vector<El<K>> cs;
        for (int e = 0; e < d; ++e) cs.push_back(random_alg_elem(r, S, l, tdeg));
        for (int tries = 0; !alg_is_unit(S, cs[0]); ++tries) {
            if (tries > 100) fail(Errc::Precondition, "could not draw a unit constant term");
            cs[0] = random_alg_elem(r, S, l, tdeg);
        }
        S.push_level(std::move(cs));
    }
    return S;
}

// Adds t^N * (random polynomial) to every nonzero coefficient.
template <class K>
Sys<K> perturb(SplitMix64& r, const Sys<K>& S, int N, int tdeg)
{
    const K& k = S.proto.field();
    RatFn<K> tN(Poly<K>::monomial(k, k.one(), N));
    return alg::map_coeffs(S, S.proto, [&](const RatFn<K>& c) {
        if (c.is_zero()) return c;
        return c + tN * RatFn<K>(random_poly(r, k, tdeg));
    });
}

// Grammar string for sum_{i,j} c[i][j] x^i t^j.
template <class K>
std::string xt_string(const K& k, const std::vector<std::vector<typename K::Elem>>& c)
{
    std::string s = "0";
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c[i].size(); ++j)
            if (!k.is_zero(c[i][j])) s += "+(" + k.str(c[i][j]) + ")*x^" + std::to_string(i) + "*t^" + std::to_string(j);
    return s;
}

template <class K>
std::string x_string(const K& k, const std::vector<typename K::Elem>& c)
{
    std::string s = "0";
    for (size_t i = 0; i < c.size(); ++i)
        if (!k.is_zero(c[i])) s += "+(" + k.str(c[i]) + ")*x^" + std::to_string(i);
    return s;
}

// Monic irreducible of degree d, by rejection (over Q only d <= 4 is decidable here).
template <class K>
std::vector<typename K::Elem> random_irreducible(SplitMix64& r, const K& k, int d)
{
    for (;;) {
        Poly<K> g(k);
        g.c.assign(d + 1, k.zero());
        for (int i = 0; i < d; ++i) g.c[i] = random_elem(r, k);
        g.c[d] = k.one();
        if (is_irreducible(g)) return g.c;
    }
}

// Coefficients c[i][j] of x^i t^j, i < d, j <= m, with a nonzero t = 0 part,
// hence a unit modulo an irreducible of degree d.
template <class K>
std::vector<std::vector<typename K::Elem>> random_ext_unit(SplitMix64& r, const K& k, int d, int m)
{
    for (;;) {
        std::vector<std::vector<typename K::Elem>> c(d, std::vector<typename K::Elem>(m + 1, k.zero()));
        bool nz = false;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j <= m; ++j) {
                c[i][j] = random_elem(r, k);
                if (j == 0 && !k.is_zero(c[i][j])) nz = true;
            }
        if (nz) return c;
    }
}

} // namespace kmil

#endif
