#ifndef KMILNOR_POLY_HPP
#define KMILNOR_POLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "kmilnor/field.hpp"

namespace kmil {

// Dense univariate polynomial over a field, trailing zeros stripped.
template <class K>
class Poly {
public:
    using E = typename K::Elem;

    K k;
    std::vector<E> c;

    Poly() = default;
    explicit Poly(const K& f) : k(f) {}
    Poly(const K& f, std::vector<E> coeffs) : k(f), c(std::move(coeffs)) { trim(); }

    static Poly constant(const K& f, const E& v) { return Poly(f, std::vector<E>{v}); }
    static Poly from_int(const K& f, int64_t v) { return constant(f, f.from_int(v)); }
    static Poly monomial(const K& f, const E& v, int d)
    {
        std::vector<E> cs(d + 1, f.zero());
        cs[d] = v;
        return Poly(f, std::move(cs));
    }
    static Poly x(const K& f) { return monomial(f, f.one(), 1); }

    void trim()
    {
        while (!c.empty() && k.is_zero(c.back())) c.pop_back();
    }

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && k.is_one(c[0]); }
    bool is_constant() const { return c.size() <= 1; }
    const E& lc() const { return c.back(); }
    E coef(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : k.zero(); }
    E at0() const { return coef(0); }
    // Index of the lowest nonzero coefficient; -1 for zero.
    int ord() const
    {
        for (size_t i = 0; i < c.size(); ++i)
            if (!k.is_zero(c[i])) return static_cast<int>(i);
        return -1;
    }

    E eval(const E& v) const
    {
        E r = k.zero();
        for (size_t i = c.size(); i-- > 0;) r = k.add(k.mul(r, v), c[i]);
        return r;
    }

    Poly operator-() const
    {
        Poly r(k);
        r.c.reserve(c.size());
        for (const auto& a : c) r.c.push_back(k.neg(a));
        return r;
    }
    Poly& operator+=(const Poly& o)
    {
        if (o.c.size() > c.size()) c.resize(o.c.size(), k.zero());
        for (size_t i = 0; i < o.c.size(); ++i) c[i] = k.add(c[i], o.c[i]);
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c.size() > c.size()) c.resize(o.c.size(), k.zero());
        for (size_t i = 0; i < o.c.size(); ++i) c[i] = k.sub(c[i], o.c[i]);
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly r(a.k);
        if (a.is_zero() || b.is_zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, a.k.zero());
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.k.is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = a.k.add(r.c[i + j], a.k.mul(a.c[i], b.c[j]));
        }
        r.trim();
        return r;
    }
    Poly scaled(const E& s) const
    {
        Poly r(k);
        if (k.is_zero(s)) return r;
        r.c.reserve(c.size());
        for (const auto& a : c) r.c.push_back(k.mul(a, s));
        r.trim();
        return r;
    }
    Poly shifted(int s) const
    {
        if (is_zero()) return *this;
        Poly r(k);
        r.c.assign(s, k.zero());
        r.c.insert(r.c.end(), c.begin(), c.end());
        return r;
    }
    // Image in k[t]/(t^N), still as a polynomial.
    Poly truncated(int N) const
    {
        Poly r = *this;
        if (static_cast<int>(r.c.size()) > N) r.c.resize(N);
        r.trim();
        return r;
    }
    Poly derivative() const
    {
        Poly r(k);
        for (size_t i = 1; i < c.size(); ++i) r.c.push_back(k.mul(k.from_int(static_cast<int64_t>(i)), c[i]));
        r.trim();
        return r;
    }
    Poly pow(unsigned e) const
    {
        Poly r = from_int(k, 1), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }
    Poly monic() const
    {
        if (is_zero()) return *this;
        return scaled(k.inv(lc()));
    }

    // Euclidean division; b must be nonzero.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b)
    {
        if (b.is_zero()) fail(Errc::DivisionByNonUnit, "polynomial division by zero");
        const K& k = a.k;
        Poly q(k), r = a;
        if (a.deg() < b.deg()) return {q, r};
        q.c.assign(a.deg() - b.deg() + 1, k.zero());
        E il = k.inv(b.lc());
        while (!r.is_zero() && r.deg() >= b.deg()) {
            int s = r.deg() - b.deg();
            E f = k.mul(r.lc(), il);
            q.c[s] = f;
            for (int j = 0; j <= b.deg(); ++j) r.c[s + j] = k.sub(r.c[s + j], k.mul(f, b.c[j]));
            r.c.pop_back();
            r.trim();
        }
        q.trim();
        return {q, r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

    // a <- a mod b, in place.
    static void reduce_mod(Poly& a, const Poly& b)
    {
        const K& k = a.k;
        int db = b.deg();
        if (a.deg() < db) return;
        E il = k.inv(b.lc());
        while (!a.is_zero() && a.deg() >= db) {
            int s = a.deg() - db;
            E f = k.mul(a.lc(), il);
            for (int j = 0; j < db; ++j) a.c[s + j] = k.sub(a.c[s + j], k.mul(f, b.c[j]));
            a.c.pop_back();
            a.trim();
        }
    }

    static Poly gcd(Poly a, Poly b)
    {
        while (!b.is_zero()) {
            reduce_mod(a, b);
            std::swap(a, b);
        }
        return a.monic();
    }

    bool operator==(const Poly& o) const
    {
        if (c.size() != o.c.size()) return false;
        for (size_t i = 0; i < c.size(); ++i)
            if (!k.eq(c[i], o.c[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Rendering such as "1+4*t+3*t^2" (Fp) or "1-t^2" (Q).
    std::string str(const std::string& var = "t") const
    {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < c.size(); ++i) {
            if (k.is_zero(c[i])) continue;
            E a = c[i];
            bool neg = k.negative(a);
            if (neg) a = k.neg(a);
            std::string coef = k.str(a);
            std::string term;
            if (i == 0) {
                term = coef;
            } else {
                std::string mono = var + (i > 1 ? "^" + std::to_string(i) : "");
                term = k.is_one(a) ? mono : coef + "*" + mono;
            }
            if (out.empty())
                out = (neg ? "-" : "") + term;
            else
                out += (neg ? "-" : "+") + term;
        }
        return out;
    }
};

} // namespace kmil

#endif
