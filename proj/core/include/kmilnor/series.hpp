#ifndef KMILNOR_SERIES_HPP
#define KMILNOR_SERIES_HPP

#include <string>
#include <vector>

#include "kmilnor/poly.hpp"

namespace kmil {

// Element of k[t]/(t^N): exactly N coefficients.
template <class K>
class TruncSeries {
public:
    using E = typename K::Elem;
    using Field = K;

    K k;
    int N = 1;
    std::vector<E> c;

    TruncSeries() = default;
    TruncSeries(const K& f, int prec) : k(f), N(prec), c(prec, f.zero())
    {
        if (prec < 1) fail(Errc::InvalidInput, "series precision must be >= 1");
    }
    TruncSeries(const K& f, int prec, const std::vector<E>& coeffs) : TruncSeries(f, prec)
    {
        for (int i = 0; i < prec && i < static_cast<int>(coeffs.size()); ++i) c[i] = coeffs[i];
    }
    static TruncSeries from_poly(const Poly<K>& p, int prec) { return TruncSeries(p.k, prec, p.c); }
    static TruncSeries constant(const K& f, int prec, const E& v)
    {
        TruncSeries r(f, prec);
        r.c[0] = v;
        return r;
    }

    TruncSeries zero_like() const { return TruncSeries(k, N); }
    TruncSeries one_like() const { return constant(k, N, k.one()); }
    TruncSeries from_int_like(int64_t v) const { return constant(k, N, k.from_int(v)); }

    bool is_zero() const
    {
        for (const auto& a : c)
            if (!k.is_zero(a)) return false;
        return true;
    }
    bool is_one() const
    {
        if (!k.is_one(c[0])) return false;
        for (int i = 1; i < N; ++i)
            if (!k.is_zero(c[i])) return false;
        return true;
    }
    bool is_unit() const { return !k.is_zero(c[0]); }
    E at0() const { return c[0]; }
    // Lowest index with a nonzero coefficient, N for zero.
    int val() const
    {
        for (int i = 0; i < N; ++i)
            if (!k.is_zero(c[i])) return i;
        return N;
    }

    TruncSeries operator-() const
    {
        TruncSeries r(k, N);
        for (int i = 0; i < N; ++i) r.c[i] = k.neg(c[i]);
        return r;
    }
    TruncSeries& operator+=(const TruncSeries& o)
    {
        check(o);
        for (int i = 0; i < N; ++i) c[i] = k.add(c[i], o.c[i]);
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o)
    {
        check(o);
        for (int i = 0; i < N; ++i) c[i] = k.sub(c[i], o.c[i]);
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
    {
        a.check(b);
        const K& k = a.k;
        TruncSeries r(k, a.N);
        for (int i = 0; i < a.N; ++i) {
            if (k.is_zero(a.c[i])) continue;
            for (int j = 0; i + j < a.N; ++j) r.c[i + j] = k.add(r.c[i + j], k.mul(a.c[i], b.c[j]));
        }
        return r;
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }
    TruncSeries scaled(const E& s) const
    {
        TruncSeries r(k, N);
        for (int i = 0; i < N; ++i) r.c[i] = k.mul(c[i], s);
        return r;
    }

    TruncSeries inv() const
    {
        if (!is_unit()) fail(Errc::NonUnit, "series inverse of a non-unit");
        TruncSeries r(k, N);
        E i0 = k.inv(c[0]);
        r.c[0] = i0;
        for (int n = 1; n < N; ++n) {
            E s = k.zero();
            for (int j = 1; j <= n; ++j) s = k.add(s, k.mul(c[j], r.c[n - j]));
            r.c[n] = k.neg(k.mul(s, i0));
        }
        return r;
    }
    TruncSeries pow(uint64_t e) const
    {
        TruncSeries r = one_like(), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }
    // Change of precision: reduce, or pad with zeros.
    TruncSeries with_prec(int M) const { return TruncSeries(k, M, c); }
    Poly<K> to_poly() const { return Poly<K>(k, c); }

    bool operator==(const TruncSeries& o) const
    {
        if (N != o.N) return false;
        for (int i = 0; i < N; ++i)
            if (!k.eq(c[i], o.c[i])) return false;
        return true;
    }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    std::string str() const { return to_poly().str("t"); }

private:
    void check(const TruncSeries& o) const
    {
        if (o.N != N) fail(Errc::Precondition, "series precision mismatch");
    }
};

} // namespace kmil

#endif
