#ifndef KMILNOR_MPOLY_HPP
#define KMILNOR_MPOLY_HPP

#include <array>
#include <map>
#include <string>

#include "kmilnor/error.hpp"

namespace kmil {

// Variable slots: 0 = x, 1..9 = y1..y9, 10..18 = z1..z9.
constexpr int kNumVars = 19;
using Mono = std::array<uint16_t, kNumVars>;

int var_index(const std::string& name);
std::string var_name(int idx);

// Sparse multivariate polynomial with coefficients in a ring C
// (C carries its own context; zero coefficients are never stored).
template <class C>
class SparsePoly {
public:
    C proto;
    std::map<Mono, C> terms;

    SparsePoly() = default;
    explicit SparsePoly(const C& zero) : proto(zero.zero_like()) {}

    static SparsePoly constant(const C& v)
    {
        SparsePoly r(v);
        if (!v.is_zero()) r.terms[Mono{}] = v;
        return r;
    }
    static SparsePoly variable(const C& zero, int idx)
    {
        SparsePoly r(zero);
        Mono m{};
        m[idx] = 1;
        r.terms[m] = zero.one_like();
        return r;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms.begin()->first == Mono{}); }
    C constant_term() const
    {
        auto it = terms.find(Mono{});
        return it == terms.end() ? proto : it->second;
    }
    int degree_in(int idx) const
    {
        int d = -1;
        for (const auto& [m, c] : terms) d = std::max<int>(d, m[idx]);
        return d;
    }
    bool uses(int idx) const { return degree_in(idx) > 0; }

    void add_term(const Mono& m, const C& c)
    {
        if (c.is_zero()) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b)
    {
        for (const auto& [m, c] : b.terms) a.add_term(m, c);
        return a;
    }
    SparsePoly operator-() const
    {
        SparsePoly r(proto);
        for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
        return r;
    }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
    {
        SparsePoly r(a.proto);
        for (const auto& [ma, ca] : a.terms)
            for (const auto& [mb, cb] : b.terms) {
                Mono m;
                for (int i = 0; i < kNumVars; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    SparsePoly scaled(const C& s) const
    {
        SparsePoly r(proto);
        for (const auto& [m, c] : terms) r.add_term(m, c * s);
        return r;
    }
    SparsePoly pow(unsigned e) const
    {
        SparsePoly r = constant(proto.one_like()), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }
};

} // namespace kmil

#endif
