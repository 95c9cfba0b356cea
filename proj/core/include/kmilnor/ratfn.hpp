#ifndef KMILNOR_RATFN_HPP
#define KMILNOR_RATFN_HPP

#include <string>

#include "kmilnor/poly.hpp"
#include "kmilnor/series.hpp"

namespace kmil {

// Element of k(t) in canonical form: gcd(num, den) = 1, den monic.
// Elements with den(0) != 0 form the local ring A = k[t]_(t); LocalScalar
// is the same type with that membership enforced at the API boundary.
template <class K>
class RatFn {
public:
    using E = typename K::Elem;
    using Field = K;

    Poly<K> num, den;

    RatFn() = default;
    explicit RatFn(const K& k) : num(k), den(Poly<K>::from_int(k, 1)) {}
    explicit RatFn(const Poly<K>& p) : num(p), den(Poly<K>::from_int(p.k, 1)) {}
    RatFn(const Poly<K>& n, const Poly<K>& d) : num(n), den(d) { normalize(); }

    static RatFn from_int(const K& k, int64_t v) { return RatFn(Poly<K>::from_int(k, v)); }
    static RatFn constant(const K& k, const E& v) { return RatFn(Poly<K>::constant(k, v)); }
    static RatFn t(const K& k) { return RatFn(Poly<K>::x(k)); }

    const K& field() const { return num.k; }
    RatFn zero_like() const { return RatFn(field()); }
    RatFn one_like() const { return from_int(field(), 1); }
    RatFn from_int_like(int64_t v) const { return from_int(field(), v); }

    bool is_zero() const { return num.is_zero(); }
    bool is_one() const { return num.is_one() && den.is_one(); }
    bool is_poly() const { return den.is_one(); }
    bool is_local() const { return !field().is_zero(den.at0()); }
    // Unit of A: local with nonzero value at t = 0.
    bool is_unit() const { return is_local() && !field().is_zero(num.at0()); }
    // t-adic valuation; large sentinel for zero.
    int val() const { return is_zero() ? 1 << 28 : num.ord() - den.ord(); }
    E at0() const
    {
        if (!is_local()) fail(Errc::DivisionByNonUnit, "value at t=0 of a non-local element");
        return field().mul(num.at0(), field().inv(den.at0()));
    }

    TruncSeries<K> truncate(int N) const
    {
        if (!is_local()) fail(Errc::DivisionByNonUnit, "truncating a non-local element");
        TruncSeries<K> n = TruncSeries<K>::from_poly(num, N);
        if (den.is_one()) return n;
        return n * TruncSeries<K>::from_poly(den, N).inv();
    }

    RatFn operator-() const
    {
        RatFn r = *this;
        r.num = -r.num;
        return r;
    }
    friend RatFn operator+(const RatFn& a, const RatFn& b)
    {
        if (a.den.is_one() && b.den.is_one()) return RatFn(a.num + b.num);
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den.is_one()) return raw(a.num * b.den + b.num, b.den);
        if (b.den.is_one()) return raw(a.num + b.num * a.den, a.den);
        Poly<K> g = Poly<K>::gcd(a.den, b.den);
        if (g.is_one()) return raw(a.num * b.den + b.num * a.den, a.den * b.den);
        Poly<K> a1 = a.den / g, b1 = b.den / g;
        Poly<K> n = a.num * b1 + b.num * a1;
        if (n.is_zero()) return RatFn(a.field());
        Poly<K> g2 = Poly<K>::gcd(n, g);
        if (g2.is_one()) return raw(n, a1 * b.den);
        return raw(n / g2, a1 * (b.den / g2));
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
    friend RatFn operator*(const RatFn& a, const RatFn& b)
    {
        if (a.is_zero() || b.is_zero()) return a.zero_like();
        if (a.den.is_one() && b.den.is_one()) return RatFn(a.num * b.num);
        Poly<K> g1 = b.den.is_one() ? b.den : Poly<K>::gcd(a.num, b.den);
        Poly<K> g2 = a.den.is_one() ? a.den : Poly<K>::gcd(b.num, a.den);
        Poly<K> an = g1.is_one() ? a.num : a.num / g1, bd = g1.is_one() ? b.den : b.den / g1;
        Poly<K> bn = g2.is_one() ? b.num : b.num / g2, ad = g2.is_one() ? a.den : a.den / g2;
        return raw(an * bn, ad * bd);
    }
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }

    // Inverse in the fraction field k(t).
    RatFn inv() const
    {
        if (is_zero()) fail(Errc::DivisionByNonUnit, "inverse of zero in k(t)");
        return RatFn(den, num);
    }
    friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inv(); }

    RatFn pow(uint64_t e) const
    {
        RatFn r = one_like(), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    bool operator==(const RatFn& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    std::string str() const
    {
        if (den.is_one()) return num.str("t");
        return "(" + num.str("t") + ")/(" + den.str("t") + ")";
    }

private:
    // Parts already coprime with monic denominator.
    static RatFn raw(Poly<K> n, Poly<K> d)
    {
        RatFn r;
        r.num = std::move(n);
        r.den = std::move(d);
        if (r.num.is_zero()) r.den = Poly<K>::from_int(r.num.k, 1);
        return r;
    }

    void normalize()
    {
        if (den.is_zero()) fail(Errc::DivisionByNonUnit, "zero denominator");
        if (num.is_zero()) {
            den = Poly<K>::from_int(num.k, 1);
            return;
        }
        if (!den.is_constant()) {
            Poly<K> g = Poly<K>::gcd(num, den);
            if (!g.is_one()) {
                num = num / g;
                den = den / g;
            }
        }
        if (!num.k.is_one(den.lc())) {
            E il = num.k.inv(den.lc());
            num = num.scaled(il);
            den = den.scaled(il);
        }
    }
};

template <class K>
using LocalScalar = RatFn<K>;

// local_arith of the scalars module.
template <class K>
RatFn<K> local_div(const RatFn<K>& a, const RatFn<K>& b)
{
    if (!b.is_unit()) fail(Errc::DivisionByNonUnit, "divisor " + b.str() + " is not a unit of A");
    return a / b;
}

template <class K>
RatFn<K> make_local(const RatFn<K>& a)
{
    if (!a.is_local()) fail(Errc::DivisionByNonUnit, a.str() + " is not in k[t]_(t)");
    return a;
}

} // namespace kmil

#endif
