#ifndef KMILNOR_WITT_HPP
#define KMILNOR_WITT_HPP

#include <numeric>
#include <vector>

#include "kmilnor/series.hpp"

namespace kmil {

// Unit series 1 + t*k[t]/(t^{m+1}); the Witt sum is series multiplication.
template <class K>
class WittVector {
public:
    using E = typename K::Elem;

    TruncSeries<K> s;

    WittVector() = default;
    explicit WittVector(const TruncSeries<K>& series) : s(series)
    {
        if (series.N < 2) fail(Errc::InvalidInput, "Witt vectors need m >= 1");
        if (!series.k.is_one(series.c[0])) fail(Errc::InvalidInput, "Witt vector series must have constant term 1, got " + series.str());
    }
    static WittVector zero(const K& k, int m) { return WittVector(TruncSeries<K>::constant(k, m + 1, k.one())); }
    // 1 - t, the multiplicative identity.
    static WittVector one(const K& k, int m)
    {
        TruncSeries<K> r = TruncSeries<K>::constant(k, m + 1, k.one());
        r.c[1] = k.neg(k.one());
        return WittVector(r);
    }

    int m() const { return s.N - 1; }
    const K& field() const { return s.k; }
    bool operator==(const WittVector& o) const { return s == o.s; }
    bool operator!=(const WittVector& o) const { return !(s == o.s); }
    std::string str() const { return s.str(); }
};

template <class K>
WittVector<K> witt_add(const WittVector<K>& x, const WittVector<K>& y)
{
    if (x.m() != y.m()) fail(Errc::Precondition, "witt_add: length mismatch");
    return WittVector<K>(x.s * y.s);
}

template <class K>
WittVector<K> witt_neg(const WittVector<K>& x)
{
    return WittVector<K>(x.s.inv());
}

// alpha_1..alpha_m with x = prod (1 - alpha_i t^i) mod t^{m+1}.
template <class K>
std::vector<typename K::Elem> witt_factor(const WittVector<K>& x)
{
    const K& k = x.field();
    int m = x.m();
    std::vector<typename K::Elem> alpha(m, k.zero());
    TruncSeries<K> run = x.s;
    for (int i = 1; i <= m; ++i) {
        auto a = k.neg(run.c[i]);
        alpha[i - 1] = a;
        if (k.is_zero(a)) continue;
        // divide by (1 - a t^i): multiply by sum_j (a t^i)^j
        TruncSeries<K> geo = run.one_like();
        auto pw = k.one();
        for (int j = 1; j * i <= m; ++j) {
            pw = k.mul(pw, a);
            geo.c[j * i] = pw;
        }
        run = run * geo;
    }
    return alpha;
}

template <class K>
WittVector<K> witt_from_factors(const K& k, int m, const std::vector<typename K::Elem>& alpha)
{
    TruncSeries<K> r = TruncSeries<K>::constant(k, m + 1, k.one());
    for (int i = 1; i <= m && i <= static_cast<int>(alpha.size()); ++i) {
        if (k.is_zero(alpha[i - 1])) continue;
        TruncSeries<K> f = r.one_like();
        f.c[i] = k.neg(alpha[i - 1]);
        r = r * f;
    }
    return WittVector<K>(r);
}

template <class K>
WittVector<K> witt_star(const WittVector<K>& x, const WittVector<K>& y)
{
    if (x.m() != y.m()) fail(Errc::Precondition, "witt_star: length mismatch");
    const K& k = x.field();
    int m = x.m();
    auto a = witt_factor(x);
    auto b = witt_factor(y);
    TruncSeries<K> r = TruncSeries<K>::constant(k, m + 1, k.one());
    for (int i = 1; i <= m; ++i) {
        if (k.is_zero(a[i - 1])) continue;
        for (int j = 1; j <= m; ++j) {
            if (k.is_zero(b[j - 1])) continue;
            int g = std::gcd(i, j);
            int L = i / g * j;
            if (L > m) continue;
            auto coef = k.mul(k.pow(a[i - 1], j / g), k.pow(b[j - 1], i / g));
            TruncSeries<K> f = r.one_like();
            f.c[L] = k.neg(coef);
            r = r * f.pow(g);
        }
    }
    return WittVector<K>(r);
}

// Largest r with x = 1 mod t^r; m+1 for the zero vector.
template <class K>
int vanishing_level(const WittVector<K>& x)
{
    for (int i = 1; i <= x.m(); ++i)
        if (!x.field().is_zero(x.s.c[i])) return i;
    return x.m() + 1;
}

template <class K>
bool ghost_defined(const K& k, int m)
{
    return K::rational || k.characteristic() > static_cast<uint64_t>(m);
}

// Ghost components w_1..w_m, checked against -t s'/s.
template <class K>
std::vector<typename K::Elem> ghost(const WittVector<K>& x)
{
    const K& k = x.field();
    int m = x.m();
    if (!ghost_defined(k, m)) fail(Errc::GhostUndefined, "ghost map needs Q or p > m (p = " + std::to_string(k.characteristic()) + ", m = " + std::to_string(m) + ")");
    auto a = witt_factor(x);
    std::vector<typename K::Elem> w(m, k.zero());
    for (int n = 1; n <= m; ++n)
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) w[n - 1] = k.add(w[n - 1], k.mul(k.from_int(d), k.pow(a[d - 1], n / d)));
    TruncSeries<K> ds(k, m + 1);
    for (int i = 1; i <= m; ++i) ds.c[i] = k.neg(k.mul(k.from_int(i), x.s.c[i]));
    TruncSeries<K> lg = ds * x.s.inv();
    for (int n = 1; n <= m; ++n)
        if (!k.eq(lg.c[n], w[n - 1])) fail(Errc::GhostUndefined, "ghost cross-check failed");
    return w;
}

} // namespace kmil

#endif
