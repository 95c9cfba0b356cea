#ifndef KMILNOR_CYCLES_HPP
#define KMILNOR_CYCLES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kmilnor/talgebra.hpp"

namespace kmil {

struct AdmissibilityReport {
    bool ok = true;
    int level = 0; // 1-based level of the first violation
    std::string reason;
};

template <class K>
AdmissibilityReport check_admissible(const Sys<K>& S)
{
    for (int l = 0; l < S.n(); ++l) {
        for (const auto& e : S.coef[l])
            if (!elem_is_local(e)) return {false, l + 1, "coefficient not in A"};
        Sys<K> pre = S.prefix(l);
        if (!alg_is_unit(pre, S.coef[l][0])) return {false, l + 1, "constant term is not a unit of the prefix quotient"};
    }
    return {};
}

// Removes every exact (y_i - 1) factor level by level (such components are empty in the cube).
// Returns nullopt when nothing is left.
template <class C>
std::optional<TriSys<C>> strip_ones(TriSys<C> S)
{
    for (int l = 0; l < S.n(); ++l) {
        for (;;) {
            int d = S.deg[l];
            AElem<C> at1 = alg::one(S, l);
            for (int e = 0; e < d; ++e) at1 = alg::add(at1, S.coef[l][e]);
            if (!alg::is_zero(at1)) break;
            if (d == 1) return std::nullopt;
            std::vector<AElem<C>> q(d - 1);
            AElem<C> cur = alg::one(S, l);
            for (int k = d - 1; k >= 1; --k) {
                cur = alg::add(S.coef[l][k], cur);
                q[k - 1] = cur;
            }
            S = alg::restrict_level(S, l, q);
        }
    }
    return S;
}

template <class K>
TriSys<TruncSeries<K>> truncate_sys(const Sys<K>& S, int N)
{
    return alg::map_coeffs(S, TruncSeries<K>(S.proto.field(), N), [&](const RatFn<K>& c) { return c.truncate(N); });
}

inline std::string join_polys(const std::vector<std::string>& v)
{
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? " ; " : "") + v[i];
    return out;
}

// Formal sum of cycles keyed by canonical form; precision 0 means exact keys,
// N > 0 keys the mod t^N presentation.
template <class K>
class CycleSum {
public:
    int prec = 0;
    std::map<std::string, long> terms;
    std::map<std::string, Sys<K>> reps;

    CycleSum() = default;
    explicit CycleSum(int precision) : prec(precision) {}

    static std::optional<std::string> key_of(const Sys<K>& S, int precision, Sys<K>* canon = nullptr)
    {
        if (precision == 0) {
            auto st = strip_ones(S);
            if (!st) return std::nullopt;
            if (canon) *canon = *st;
            return join_polys(sys_strings(*st));
        }
        auto st = strip_ones(truncate_sys(S, precision));
        if (!st) return std::nullopt;
        if (canon) *canon = S;
        return join_polys(sys_strings(*st));
    }

    void add(const Sys<K>& S, long mult)
    {
        if (mult == 0) return;
        Sys<K> canon;
        auto key = key_of(S, prec, &canon);
        if (!key) return;
        auto it = terms.find(*key);
        if (it == terms.end()) {
            terms.emplace(*key, mult);
            reps.emplace(*key, canon);
            return;
        }
        it->second += mult;
        if (it->second == 0) {
            terms.erase(it);
            reps.erase(*key);
        }
    }
    void add(const CycleSum& o, long mult = 1)
    {
        for (const auto& [k, v] : o.terms) {
            long nv = (terms.count(k) ? terms[k] : 0) + v * mult;
            if (nv == 0) {
                terms.erase(k);
                reps.erase(k);
            } else {
                terms[k] = nv;
                if (!reps.count(k)) reps.emplace(k, o.reps.at(k));
            }
        }
    }
    // Re-key at a coarser precision.
    CycleSum at_prec(int N) const
    {
        CycleSum r(N);
        for (const auto& [k, v] : terms) r.add(reps.at(k), v);
        return r;
    }
    bool empty() const { return terms.empty(); }
    bool operator==(const CycleSum& o) const { return prec == o.prec && terms == o.terms; }
    bool operator!=(const CycleSum& o) const { return !(*this == o); }
    friend CycleSum operator-(const CycleSum& a, const CycleSum& b)
    {
        CycleSum r = a;
        r.add(b, -1);
        return r;
    }
    friend CycleSum operator+(const CycleSum& a, const CycleSum& b)
    {
        CycleSum r = a;
        r.add(b, 1);
        return r;
    }
    std::string str() const
    {
        if (terms.empty()) return "0";
        std::string out;
        for (const auto& [k, v] : terms) {
            if (!out.empty()) out += v < 0 ? " - " : " + ";
            else if (v < 0) out += "-";
            out += std::to_string(v < 0 ? -v : v) + "*[" + k + "]";
        }
        return out;
    }
};

template <class K>
Sys<K> graph_system(const K& k, const std::vector<RatFn<K>>& coords)
{
    Sys<K> S{RatFn<K>(k)};
    for (const auto& a : coords) S.push_level({El<K>{-a}});
    return S;
}

template <class K>
bool is_graph(const Sys<K>& S)
{
    for (int d : S.deg)
        if (d != 1) return false;
    return true;
}

// Coordinates of a degree-(1,...,1) system.
template <class K>
std::vector<RatFn<K>> graph_coords(const Sys<K>& S)
{
    std::vector<RatFn<K>> out;
    for (int l = 0; l < S.n(); ++l) out.push_back(-S.coef[l][0][0]);
    return out;
}

template <class K>
Sys<K> compact_project(const Sys<K>& S, int i)
{
    if (i < 1 || i > S.n()) fail(Errc::Precondition, "compact_project index out of range");
    return S.prefix(i);
}

template <class K>
bool mod_equiv(const Sys<K>& a, const Sys<K>& b, int N)
{
    if (a.deg != b.deg) return false;
    return truncate_sys(a, N) == truncate_sys(b, N);
}

template <class K>
CycleSum<K> specialize(const Sys<K>& S)
{
    const K& k = S.proto.field();
    Sys<K> S0 = alg::map_coeffs(S, RatFn<K>(k), [&](const RatFn<K>& c) { return RatFn<K>::constant(k, c.at0()); });
    CycleSum<K> r(1);
    r.add(S0, 1);
    return r;
}

namespace detail {

// Largest r <= cap with every root of the characteristic polynomial of valuation > r-1.
template <class K>
int slope_order(const std::vector<TruncSeries<K>>& cp, int cap)
{
    int D = static_cast<int>(cp.size()) - 1;
    for (int r = cap; r >= 1; --r) {
        bool ok = true;
        for (int j = 0; j < D && ok; ++j)
            if (cp[j].val() <= (r - 1) * (D - j)) ok = false;
        if (ok) return r;
    }
    return 0;
}

} // namespace detail

// Vanishing order via t-adic valuations of y_i - 1 on the cycle's coordinate ring:
// r such that at every geometric point some coordinate satisfies v(y_i - 1) > r - 1.
// Per-coordinate Newton polygons give this exactly for graphs and for n = 1; for
// mixed multi-component cycles the value is a lower bound. Order >= 1 is decided
// exactly by nilpotency of prod (y_i - 1) modulo t.
template <class K>
int vanishing_order(const Sys<K>& S, int m)
{
    auto adm = check_admissible(S);
    if (!adm.ok) fail(Errc::Precondition, "vanishing_order needs an admissible cycle: " + adm.reason);
    int cap = m + 1;
    int best = 0;
    for (int i = 0; i < S.n(); ++i) {
        int Di = static_cast<int>(S.dim(i + 1));
        int N = m * Di + 1;
        auto T = truncate_sys(S.prefix(i + 1), N);
        auto y = alg::sub(alg::var(T, i + 1, i), alg::one(T, i + 1));
        auto cp = charpoly(alg::mul_matrix(T, i + 1, y), TruncSeries<K>(S.proto.field(), N));
        best = std::max(best, detail::slope_order<K>(cp, cap));
    }
    if (best == 0) {
        auto T = truncate_sys(S, 1);
        int n = S.n();
        auto prod = alg::one(T, n);
        for (int i = 0; i < n; ++i) prod = alg::mul(T, n, prod, alg::sub(alg::var(T, n, i), alg::one(T, n)));
        size_t D = T.dim();
        for (size_t p = 1; p < D; p *= 2) prod = alg::mul(T, n, prod, prod);
        if (alg::is_zero(prod)) best = 1;
    }
    return std::min(best, cap);
}

} // namespace kmil

#endif
