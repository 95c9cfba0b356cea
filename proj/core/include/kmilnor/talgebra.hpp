#ifndef KMILNOR_TALGEBRA_HPP
#define KMILNOR_TALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "kmilnor/irreducible.hpp"
#include "kmilnor/scalars.hpp"
#include "kmilnor/tower.hpp"

namespace kmil {

template <class K>
using Sys = TriSys<RatFn<K>>;
template <class K>
using El = AElem<RatFn<K>>;

// Finite free A-algebra with chosen unit coordinates (a pushed-forward point).
template <class K>
struct PointRep {
    Sys<K> algebra;
    std::vector<El<K>> coords;
    long mult = 1;
};

template <class K>
bool sys_is_local(const Sys<K>& S)
{
    for (const auto& lv : S.coef)
        for (const auto& e : lv)
            for (const auto& c : e)
                if (!c.is_local()) return false;
    return true;
}

template <class K>
bool elem_is_local(const El<K>& a)
{
    for (const auto& c : a)
        if (!c.is_local()) return false;
    return true;
}

// Reduction mod t: the residue algebra over k, as series of precision 1.
template <class K>
TriSys<TruncSeries<K>> at_zero(const Sys<K>& S)
{
    const K& k = S.proto.field();
    return alg::map_coeffs(S, TruncSeries<K>(k, 1), [&](const RatFn<K>& c) { return c.truncate(1); });
}

template <class K>
AElem<TruncSeries<K>> elem_at_zero(const El<K>& a)
{
    return alg::map_elem<TruncSeries<K>>(a, [](const RatFn<K>& c) { return c.truncate(1); });
}

template <class K>
std::optional<El<K>> inverse_over_F(const Sys<K>& S, const El<K>& a)
{
    int l = S.n();
    Mat<RatFn<K>> M = alg::mul_matrix(S, l, a);
    auto sol = solve(M, alg::one(S, l), S.proto);
    if (!sol) return std::nullopt;
    // a solvable system with a singular matrix cannot produce an inverse
    El<K> chk = alg::mul(S, l, a, *sol);
    if (!alg::is_one(chk)) return std::nullopt;
    return *sol;
}

template <class K>
bool invertible_over_F(const Sys<K>& S, const El<K>& a)
{
    if (alg::is_zero(a)) return false;
    if (sys_is_local(S) && elem_is_local(a)) {
        auto S0 = at_zero(S);
        Mat<TruncSeries<K>> M0 = alg::mul_matrix(S0, S0.n(), elem_at_zero(a));
        if (rank(M0) == M0.rows) return true;
    }
    Mat<RatFn<K>> M = alg::mul_matrix(S, S.n(), a);
    return rank(M) == M.rows;
}

// Unit of the A-algebra: invertible with an inverse in A-coefficients.
template <class K>
bool alg_is_unit(const Sys<K>& S, const El<K>& a)
{
    if (sys_is_local(S) && elem_is_local(a)) {
        auto S0 = at_zero(S);
        Mat<TruncSeries<K>> M0 = alg::mul_matrix(S0, S0.n(), elem_at_zero(a));
        return rank(M0) == M0.rows;
    }
    auto inv = inverse_over_F(S, a);
    return inv && elem_is_local(*inv);
}

template <class K>
El<K> alg_inv(const Sys<K>& S, const El<K>& a)
{
    auto inv = inverse_over_F(S, a);
    if (!inv) fail(Errc::NonUnit, "element is a zero divisor over k(t)");
    if (!elem_is_local(*inv)) fail(Errc::NonUnit, "inverse has a denominator vanishing at t = 0");
    return *inv;
}

template <class K>
El<K> normal_form(const Sys<K>& S, const std::string& poly)
{
    std::vector<int> slots(kNumVars, -1);
    for (int j = 1; j <= S.n() && j <= 9; ++j) slots[j] = j - 1;
    auto sp = parse_sparse(S.proto.field(), poly);
    return alg::from_sparse(S, S.n(), sp, slots, [](const RatFn<K>& c) { return c; });
}

// Builds a triangular system from polynomial strings in y1..yn (coefficients in A).
// Coefficients are brought to normal form with respect to the earlier levels.
template <class K>
Sys<K> parse_system(const K& k, const std::vector<std::string>& polys)
{
    Sys<K> S{RatFn<K>(k)};
    int n = static_cast<int>(polys.size());
    if (n > 9) fail(Errc::InvalidInput, "at most 9 bound variables");
    std::vector<int> slots(kNumVars, -1);
    for (int j = 1; j <= n; ++j) slots[j] = j - 1;
    for (int i = 1; i <= n; ++i) {
        auto sp = parse_sparse(k, polys[i - 1]);
        for (const auto& [m, c] : sp.terms) {
            for (int s = 0; s < kNumVars; ++s)
                if (m[s] && (s == 0 || s > i))
                    fail(Errc::InvalidInput, "P_" + std::to_string(i) + " may only involve y1..y" + std::to_string(i));
            if (!c.is_local()) fail(Errc::InvalidInput, "coefficient " + c.str() + " is not in A");
        }
        int d = sp.degree_in(i);
        if (d < 1) fail(Errc::InvalidInput, "P_" + std::to_string(i) + " has degree 0 in y" + std::to_string(i));
        std::vector<SparsePoly<RatFn<K>>> parts(d + 1, SparsePoly<RatFn<K>>(RatFn<K>(k)));
        for (const auto& [m, c] : sp.terms) {
            Mono mm = m;
            int e = mm[i];
            mm[i] = 0;
            parts[e].add_term(mm, c);
        }
        auto conv = [](const RatFn<K>& c) { return c; };
        El<K> lead = alg::from_sparse(S, i - 1, parts[d], slots, conv);
        if (!alg::is_one(lead)) fail(Errc::InvalidInput, "P_" + std::to_string(i) + " is not monic in y" + std::to_string(i));
        std::vector<El<K>> cs;
        for (int e = 0; e < d; ++e) cs.push_back(alg::from_sparse(S, i - 1, parts[e], slots, conv));
        S.push_level(std::move(cs));
    }
    return S;
}

// Monic minimal polynomial of coords[i-1] over the subalgebra presented by prefix
// (computed over k(t), then required to have coefficients in A).
template <class K>
std::vector<El<K>> min_poly_tower(const PointRep<K>& pt, int i, const Sys<K>& prefix)
{
    const Sys<K>& S = pt.algebra;
    int L = S.n();
    int D = static_cast<int>(S.dim());
    int Dp = static_cast<int>(prefix.dim());
    std::vector<El<K>> img;
    for (int nu = 0; nu < Dp; ++nu) {
        auto ex = alg::exponents(prefix, prefix.n(), nu);
        El<K> v = alg::one(S, L);
        for (int j = 0; j < prefix.n(); ++j)
            if (ex[j]) v = alg::mul(S, L, v, alg::pow(S, L, pt.coords[j], ex[j]));
        img.push_back(std::move(v));
    }
    const El<K>& beta = pt.coords[i - 1];
    std::vector<El<K>> cols;
    El<K> bpow = alg::one(S, L);
    for (int e = 1; e * Dp <= D; ++e) {
        for (int nu = 0; nu < Dp; ++nu) cols.push_back(alg::mul(S, L, img[nu], bpow));
        bpow = alg::mul(S, L, bpow, beta);
        Mat<RatFn<K>> M(D, static_cast<int>(cols.size()), S.proto);
        for (int c = 0; c < M.cols; ++c)
            for (int r = 0; r < D; ++r) M.at(r, c) = cols[c][r];
        if (rank(M) != M.cols) fail(Errc::DenominatorNotUnit, "coordinate " + std::to_string(i) + " does not generate a free extension of the prefix subalgebra");
        auto sol = solve(M, bpow, S.proto);
        if (!sol) continue;
        std::vector<El<K>> coefs;
        for (int k = 0; k < e; ++k) {
            El<K> c = alg::zero(prefix, prefix.n());
            for (int nu = 0; nu < Dp; ++nu) c[nu] = -(*sol)[k * Dp + nu];
            if (!elem_is_local(c)) fail(Errc::DenominatorNotUnit, "minimal polynomial of coordinate " + std::to_string(i) + " has non-integral coefficients");
            coefs.push_back(std::move(c));
        }
        return coefs;
    }
    fail(Errc::DenominatorNotUnit, "no minimal polynomial found for coordinate " + std::to_string(i));
}

template <class K>
std::pair<Sys<K>, long> triangularize(const PointRep<K>& pt)
{
    for (const auto& c : pt.coords)
        if (!alg_is_unit(pt.algebra, c)) fail(Errc::NonUnitCoordinate, "point coordinate is not a unit");
    Sys<K> T{pt.algebra.proto};
    for (int i = 1; i <= static_cast<int>(pt.coords.size()); ++i) T.push_level(min_poly_tower(pt, i, T));
    long total = pt.mult * static_cast<long>(pt.algebra.dim());
    long prod = static_cast<long>(T.dim());
    if (total % prod != 0) fail(Errc::DenominatorNotUnit, "rank accounting does not divide");
    return {T, total / prod};
}

// Algebra A[x]/(g) for g in k[x]; g is made monic.
template <class K>
Sys<K> extension_algebra(const K& k, const std::string& g_str)
{
    auto sp = parse_sparse(k, g_str);
    for (const auto& [m, c] : sp.terms) {
        for (int s = 1; s < kNumVars; ++s)
            if (m[s]) fail(Errc::InvalidInput, "extension polynomial must be in x only");
        if (!c.is_poly() || c.num.deg() > 0) fail(Errc::InvalidInput, "extension polynomial must have coefficients in k");
    }
    int d = sp.degree_in(0);
    if (d < 1) fail(Errc::InvalidInput, "extension polynomial has degree 0");
    Poly<K> g(k);
    g.c.assign(d + 1, k.zero());
    for (const auto& [m, c] : sp.terms) g.c[m[0]] = c.num.at0();
    g.trim();
    if (!is_irreducible(g)) fail(Errc::ReducibleExtension, g_str + " is reducible over " + k.tag());
    g = g.monic();
    Sys<K> S{RatFn<K>(k)};
    std::vector<El<K>> cs;
    for (int e = 0; e < d; ++e) cs.push_back(El<K>{RatFn<K>::constant(k, g.c[e])});
    S.push_level(std::move(cs));
    return S;
}

// Parses an element of an algebra whose levels are named by variable slots.
template <class K>
El<K> parse_alg_elem(const Sys<K>& S, const std::string& s, const std::vector<int>& slot_level, int lift_prec)
{
    auto sp = parse_sparse(S.proto.field(), s);
    return alg::from_sparse(S, S.n(), sp, slot_level, [&](const RatFn<K>& c) {
        if (!c.is_local()) fail(Errc::NonUnitCoordinate, "coefficient " + c.str() + " is not in A");
        if (lift_prec <= 0) return c;
        return RatFn<K>(c.truncate(lift_prec).to_poly());
    });
}

inline std::vector<int> x_slot()
{
    std::vector<int> v(kNumVars, -1);
    v[0] = 0;
    return v;
}

// Base change of a symbol over k'_{m+1} = k[x]/(g)[t]/(t^{m+1}); lift_prec = m+1
// takes the canonical polynomial lift, 0 keeps coordinates exact.
template <class K>
PointRep<K> base_change_point(const K& k, const std::string& g, const std::vector<std::string>& coords, int lift_prec)
{
    PointRep<K> pt;
    pt.algebra = extension_algebra(k, g);
    for (const auto& c : coords) {
        El<K> e = parse_alg_elem(pt.algebra, c, x_slot(), lift_prec);
        if (!alg_is_unit(pt.algebra, e)) fail(Errc::NonUnitCoordinate, "coordinate " + c + " is not a unit");
        pt.coords.push_back(std::move(e));
    }
    pt.mult = 1;
    return pt;
}

} // namespace kmil

#endif
