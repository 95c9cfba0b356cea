#ifndef KMILNOR_TOWER_HPP
#define KMILNOR_TOWER_HPP

#include <functional>
#include <string>
#include <vector>

#include "kmilnor/linalg.hpp"
#include "kmilnor/mpoly.hpp"

namespace kmil {

// Monic triangular system P_1..P_n over a coefficient ring C.
// Level l (0-based) carries P_{l+1} = y^d + sum_{e<d} coef[l][e] * y^e, where each
// coef[l][e] is an element of R_l = C[y_1..y_l]/(P_1..P_l) in normal form.
// Elements of R_l are flat vectors of length dim(l); the coefficient of
// y_1^{e_1}...y_l^{e_l} sits at index sum_j e_j * dim(j).
template <class C>
struct TriSys {
    C proto;
    std::vector<int> deg;
    std::vector<std::vector<std::vector<C>>> coef;

    TriSys() = default;
    explicit TriSys(const C& zero) : proto(zero.zero_like()) {}

    int n() const { return static_cast<int>(deg.size()); }
    size_t dim(int l) const
    {
        size_t d = 1;
        for (int j = 0; j < l; ++j) d *= static_cast<size_t>(deg[j]);
        return d;
    }
    size_t dim() const { return dim(n()); }

    // First l levels.
    TriSys prefix(int l) const
    {
        TriSys r(proto);
        r.deg.assign(deg.begin(), deg.begin() + l);
        r.coef.assign(coef.begin(), coef.begin() + l);
        return r;
    }
    void push_level(std::vector<std::vector<C>> cs)
    {
        deg.push_back(static_cast<int>(cs.size()));
        coef.push_back(std::move(cs));
    }
    bool operator==(const TriSys& o) const
    {
        if (deg != o.deg) return false;
        for (size_t l = 0; l < coef.size(); ++l)
            for (size_t e = 0; e < coef[l].size(); ++e)
                for (size_t i = 0; i < coef[l][e].size(); ++i)
                    if (coef[l][e][i] != o.coef[l][e][i]) return false;
        return true;
    }
};

template <class C>
using AElem = std::vector<C>;

// Univariate polynomial over an algebra R_l (coefficients low to high).
template <class C>
using UPoly = std::vector<AElem<C>>;

namespace alg {

template <class C>
AElem<C> zero(const TriSys<C>& S, int l)
{
    return AElem<C>(S.dim(l), S.proto);
}

template <class C>
AElem<C> scalar(const TriSys<C>& S, int l, const C& c)
{
    AElem<C> r = zero(S, l);
    r[0] = c;
    return r;
}

template <class C>
AElem<C> one(const TriSys<C>& S, int l)
{
    return scalar(S, l, S.proto.one_like());
}

template <class C>
bool is_zero(const AElem<C>& a)
{
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

template <class C>
bool is_one(const AElem<C>& a)
{
    if (!a[0].is_one()) return false;
    for (size_t i = 1; i < a.size(); ++i)
        if (!a[i].is_zero()) return false;
    return true;
}

template <class C>
bool equal(const AElem<C>& a, const AElem<C>& b)
{
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

template <class C>
AElem<C> add(AElem<C> a, const AElem<C>& b)
{
    for (size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] = a[i] + b[i];
    return a;
}

template <class C>
AElem<C> sub(AElem<C> a, const AElem<C>& b)
{
    for (size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] = a[i] - b[i];
    return a;
}

template <class C>
AElem<C> neg(AElem<C> a)
{
    for (auto& c : a)
        if (!c.is_zero()) c = -c;
    return a;
}

template <class C>
AElem<C> scale(AElem<C> a, const C& s)
{
    for (auto& c : a)
        if (!c.is_zero()) c = c * s;
    return a;
}

namespace detail {

template <class C>
void mul_into(const TriSys<C>& S, int l, const C* a, const C* b, C* out)
{
    if (l == 0) {
        out[0] = (a[0].is_zero() || b[0].is_zero()) ? S.proto : a[0] * b[0];
        return;
    }
    const size_t B = S.dim(l - 1);
    const int d = S.deg[l - 1];
    if (d == 1) {
        mul_into(S, l - 1, a, b, out);
        return;
    }
    std::vector<C> prod(static_cast<size_t>(2 * d - 1) * B, S.proto);
    std::vector<C> tmp(B, S.proto);
    auto nz = [&](const C* p) {
        for (size_t i = 0; i < B; ++i)
            if (!p[i].is_zero()) return true;
        return false;
    };
    std::vector<bool> anz(d), bnz(d);
    for (int i = 0; i < d; ++i) {
        anz[i] = nz(a + i * B);
        bnz[i] = nz(b + i * B);
    }
    for (int i = 0; i < d; ++i) {
        if (!anz[i]) continue;
        for (int j = 0; j < d; ++j) {
            if (!bnz[j]) continue;
            mul_into(S, l - 1, a + i * B, b + j * B, tmp.data());
            C* dst = prod.data() + (i + j) * B;
            for (size_t k = 0; k < B; ++k)
                if (!tmp[k].is_zero()) dst[k] = dst[k] + tmp[k];
        }
    }
    const auto& P = S.coef[l - 1];
    for (int e = 2 * d - 2; e >= d; --e) {
        C* top = prod.data() + e * B;
        if (!nz(top)) continue;
        for (int j = 0; j < d; ++j) {
            mul_into(S, l - 1, top, P[j].data(), tmp.data());
            C* dst = prod.data() + (e - d + j) * B;
            for (size_t k = 0; k < B; ++k)
                if (!tmp[k].is_zero()) dst[k] = dst[k] - tmp[k];
        }
    }
    for (size_t k = 0; k < static_cast<size_t>(d) * B; ++k) out[k] = prod[k];
}

} // namespace detail

template <class C>
AElem<C> mul(const TriSys<C>& S, int l, const AElem<C>& a, const AElem<C>& b)
{
    AElem<C> r = zero(S, l);
    detail::mul_into(S, l, a.data(), b.data(), r.data());
    return r;
}

template <class C>
AElem<C> pow(const TriSys<C>& S, int l, AElem<C> a, uint64_t e)
{
    AElem<C> r = one(S, l);
    while (e) {
        if (e & 1) r = mul(S, l, r, a);
        e >>= 1;
        if (e) a = mul(S, l, a, a);
    }
    return r;
}

// y_{j+1} (0-based level j < l) as an element of R_l.
template <class C>
AElem<C> var(const TriSys<C>& S, int l, int j)
{
    AElem<C> r = zero(S, l);
    if (S.deg[j] == 1) {
        // degree-one level: y = -coef
        AElem<C> v = neg(S.coef[j][0]);
        for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
        return r;
    }
    r[S.dim(j)] = S.proto.one_like();
    return r;
}

// R_from -> R_to (from <= to): zero padding.
template <class C>
AElem<C> embed(const TriSys<C>& S, const AElem<C>& a, int to)
{
    AElem<C> r = zero(S, to);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    return r;
}

// Horner evaluation of a polynomial over R_l at an element of R_l.
template <class C>
AElem<C> eval(const TriSys<C>& S, int l, const UPoly<C>& p, const AElem<C>& x)
{
    AElem<C> r = zero(S, l);
    for (size_t i = p.size(); i-- > 0;) r = add(mul(S, l, r, x), p[i]);
    return r;
}

// Element of R_{l+1} viewed as a polynomial in y_{l+1} over R_l.
template <class C>
UPoly<C> as_upoly(const TriSys<C>& S, int l, const AElem<C>& a)
{
    size_t B = S.dim(l);
    UPoly<C> p(S.deg[l], zero(S, l));
    for (int e = 0; e < S.deg[l]; ++e)
        for (size_t i = 0; i < B; ++i) p[e][i] = a[e * B + i];
    return p;
}

template <class C>
void trim(UPoly<C>& p)
{
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class C>
UPoly<C> upoly_mul(const TriSys<C>& S, int l, const UPoly<C>& a, const UPoly<C>& b)
{
    if (a.empty() || b.empty()) return {};
    UPoly<C> r(a.size() + b.size() - 1, zero(S, l));
    for (size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!is_zero(b[j])) r[i + j] = add(r[i + j], mul(S, l, a[i], b[j]));
    }
    trim(r);
    return r;
}

// Reduces a polynomial over R_l modulo the monic polynomial y^d + sum q_e y^e.
template <class C>
UPoly<C> upoly_rem_monic(const TriSys<C>& S, int l, UPoly<C> p, const std::vector<AElem<C>>& q)
{
    int d = static_cast<int>(q.size());
    for (int e = static_cast<int>(p.size()) - 1; e >= d; --e) {
        if (is_zero(p[e])) continue;
        AElem<C> top = p[e];
        for (int j = 0; j < d; ++j) p[e - d + j] = sub(p[e - d + j], mul(S, l, top, q[j]));
        p[e] = zero(S, l);
    }
    if (static_cast<int>(p.size()) > d) p.resize(d);
    while (static_cast<int>(p.size()) < d) p.push_back(zero(S, l));
    return p;
}

// Multiplication-by-a matrix on R_l (columns are images of basis vectors).
template <class C>
Mat<C> mul_matrix(const TriSys<C>& S, int l, const AElem<C>& a)
{
    int D = static_cast<int>(S.dim(l));
    Mat<C> M(D, D, S.proto);
    for (int j = 0; j < D; ++j) {
        AElem<C> e = zero(S, l);
        e[j] = S.proto.one_like();
        AElem<C> col = mul(S, l, a, e);
        for (int i = 0; i < D; ++i) M.at(i, j) = col[i];
    }
    return M;
}

// Coefficient-wise change of ring.
template <class C2, class C, class F>
TriSys<C2> map_coeffs(const TriSys<C>& S, const C2& zero2, F&& f)
{
    TriSys<C2> r(zero2);
    for (int l = 0; l < S.n(); ++l) {
        std::vector<std::vector<C2>> cs;
        for (const auto& e : S.coef[l]) {
            std::vector<C2> v;
            v.reserve(e.size());
            for (const auto& c : e) v.push_back(f(c));
            cs.push_back(std::move(v));
        }
        r.push_level(std::move(cs));
    }
    return r;
}

template <class C2, class C, class F>
AElem<C2> map_elem(const AElem<C>& a, F&& f)
{
    AElem<C2> r;
    r.reserve(a.size());
    for (const auto& c : a) r.push_back(f(c));
    return r;
}

// Replaces level l by the monic divisor q (degree < deg[l]) and reduces all later
// coefficients accordingly. Returns the new system.
template <class C>
TriSys<C> restrict_level(const TriSys<C>& S, int l, const std::vector<AElem<C>>& q)
{
    TriSys<C> r = S.prefix(l);
    int oldd = S.deg[l];
    size_t B = S.dim(l);
    r.push_level(q);
    auto reduce_block = [&](const C* blk, std::vector<C>& out) {
        UPoly<C> p(oldd, zero(S, l));
        for (int e = 0; e < oldd; ++e)
            for (size_t i = 0; i < B; ++i) p[e][i] = blk[e * B + i];
        UPoly<C> red = upoly_rem_monic(S, l, p, q);
        for (const auto& cblk : red) out.insert(out.end(), cblk.begin(), cblk.end());
    };
    for (int m = l + 1; m < S.n(); ++m) {
        std::vector<std::vector<C>> cs;
        for (const auto& e : S.coef[m]) {
            std::vector<C> out;
            size_t blk = B * oldd;
            for (size_t off = 0; off < e.size(); off += blk) reduce_block(e.data() + off, out);
            cs.push_back(std::move(out));
        }
        r.push_level(std::move(cs));
    }
    return r;
}

// Elements of a triangular algebra from polynomials in named variable slots.
// slot_level[s] gives the level of variable slot s (or -1 if unused).
template <class C, class Coef, class Conv>
AElem<C> from_sparse(const TriSys<C>& S, int l, const SparsePoly<Coef>& p, const std::vector<int>& slot_level, Conv&& conv)
{
    AElem<C> r = zero(S, l);
    std::vector<AElem<C>> vars(kNumVars);
    for (const auto& [m, c] : p.terms) {
        AElem<C> term = scalar(S, l, conv(c));
        for (int s = 0; s < kNumVars; ++s) {
            if (m[s] == 0) continue;
            int lev = slot_level[s];
            if (lev < 0 || lev >= l) fail(Errc::InvalidInput, "variable " + var_name(s) + " not available here");
            if (vars[s].empty()) vars[s] = var(S, l, lev);
            term = mul(S, l, term, pow(S, l, vars[s], m[s]));
        }
        r = add(r, term);
    }
    return r;
}

// Monomial exponents of flat index idx at level l.
template <class C>
std::vector<int> exponents(const TriSys<C>& S, int l, size_t idx)
{
    std::vector<int> e(l, 0);
    for (int j = 0; j < l; ++j) {
        e[j] = static_cast<int>((idx / S.dim(j)) % S.deg[j]);
    }
    return e;
}

} // namespace alg

inline bool atomic_coef(const std::string& s)
{
    return s.find_first_of("+-/", 1) == std::string::npos && (s.empty() || s[0] != '(');
}

// Renders an element of R_l in variables named by `names` (one per level).
template <class C>
std::string elem_str(const TriSys<C>& S, int l, const AElem<C>& a, const std::vector<std::string>& names)
{
    std::vector<std::string> terms;
    size_t nz = 0;
    for (const auto& c : a)
        if (!c.is_zero()) ++nz;
    for (size_t idx = a.size(); idx-- > 0;) {
        if (a[idx].is_zero()) continue;
        auto ex = alg::exponents(S, l, idx);
        std::string mono;
        for (int j = l - 1; j >= 0; --j) {
            if (ex[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[j] + (ex[j] > 1 ? "^" + std::to_string(ex[j]) : "");
        }
        std::string cs = a[idx].str();
        bool atom = atomic_coef(cs) && cs[0] != '-';
        if (mono.empty())
            terms.push_back(nz == 1 || atom ? cs : "(" + cs + ")");
        else if (a[idx].is_one())
            terms.push_back(mono);
        else
            terms.push_back((atom ? cs : "(" + cs + ")") + "*" + mono);
    }
    std::string out;
    for (const auto& t : terms) out += (out.empty() ? "" : "+") + t;
    return out.empty() ? "0" : out;
}

template <class C>
std::string level_str(const TriSys<C>& S, int l, const std::vector<std::string>& names)
{
    int d = S.deg[l];
    std::string out = names[l] + (d > 1 ? "^" + std::to_string(d) : "");
    for (int e = d - 1; e >= 0; --e) {
        const auto& c = S.coef[l][e];
        if (alg::is_zero(c)) continue;
        std::string mono = e == 0 ? "" : names[l] + (e > 1 ? "^" + std::to_string(e) : "");
        if (alg::is_one(c) && !mono.empty()) {
            out += "+" + mono;
            continue;
        }
        std::string cs = elem_str(S, l, c, names);
        bool atom = cs.find_first_of("+-/(") == std::string::npos;
        out += "+" + (atom ? cs : "(" + cs + ")") + (mono.empty() ? "" : "*" + mono);
    }
    return out;
}

inline std::vector<std::string> y_names(int n)
{
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("y" + std::to_string(i));
    return v;
}

template <class C>
std::vector<std::string> sys_strings(const TriSys<C>& S, const std::vector<std::string>& names)
{
    std::vector<std::string> out;
    for (int l = 0; l < S.n(); ++l) out.push_back(level_str(S, l, names));
    return out;
}

template <class C>
std::vector<std::string> sys_strings(const TriSys<C>& S)
{
    return sys_strings(S, y_names(S.n()));
}

} // namespace kmil

#endif
