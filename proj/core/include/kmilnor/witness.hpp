#ifndef KMILNOR_WITNESS_HPP
#define KMILNOR_WITNESS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kmilnor/cycles.hpp"

namespace kmil {

// Polynomial in the curve parameter x over a prefix algebra R (low to high).
template <class K>
using RPoly = UPoly<RatFn<K>>;

// One coordinate of a curve witness W in X x box^{n+1}. The curve is
// parametrized by x over the prefix algebra R:
//   Prefix: y = the matching level variable of R
//   Const:  y = w (element of R)
//   Free:   y = x
//   Det:    a(x) * y = b(x)
template <class K>
struct Coord {
    enum class Kind { Prefix, Const, Free, Det };
    Kind kind = Kind::Free;
    El<K> w;
    RPoly<K> a, b;

    static Coord prefix() { return Coord{Kind::Prefix, {}, {}, {}}; }
    static Coord constant(El<K> v) { return Coord{Kind::Const, std::move(v), {}, {}}; }
    static Coord free() { return Coord{Kind::Free, {}, {}, {}}; }
    static Coord det(RPoly<K> a, RPoly<K> b) { return Coord{Kind::Det, {}, std::move(a), std::move(b)}; }
};

template <class K>
struct CurveWitness {
    Sys<K> R;
    std::vector<Coord<K>> coords;
    int sign = 1;
};

namespace wdetail {

template <class K>
RPoly<K> ptrim(RPoly<K> p)
{
    alg::trim(p);
    return p;
}

template <class K>
int pdeg(const RPoly<K>& p)
{
    return static_cast<int>(ptrim(p).size()) - 1;
}

template <class K>
El<K> pval1(const Sys<K>& R, const RPoly<K>& p)
{
    El<K> s = alg::zero(R, R.n());
    for (const auto& c : p) s = alg::add(s, c);
    return s;
}

// Removes every exact factor (x - 1).
template <class K>
RPoly<K> strip_xm1(const Sys<K>& R, RPoly<K> p)
{
    p = ptrim(p);
    while (p.size() >= 2 && alg::is_zero(pval1(R, p))) {
        size_t n = p.size() - 1;
        RPoly<K> q(n, alg::zero(R, R.n()));
        q[n - 1] = p[n];
        for (size_t e = n - 1; e >= 1; --e) q[e - 1] = alg::add(p[e], q[e]);
        p = ptrim(q);
    }
    return p;
}

// p(rho) for p over R and rho in an extension S whose first levels are R.
template <class K>
El<K> peval(const Sys<K>& S, const RPoly<K>& p, const El<K>& rho)
{
    int L = S.n();
    El<K> r = alg::zero(S, L);
    for (size_t i = p.size(); i-- > 0;) r = alg::add(alg::mul(S, L, r, rho), alg::embed(S, p[i], L));
    return r;
}

template <class K>
RPoly<K> pmul(const Sys<K>& R, const RPoly<K>& a, const RPoly<K>& b)
{
    return alg::upoly_mul(R, R.n(), a, b);
}

template <class K>
RPoly<K> monic_over(const Sys<K>& R, const RPoly<K>& p)
{
    El<K> inv = alg_inv(R, p.back());
    RPoly<K> r;
    for (const auto& c : p) r.push_back(alg::mul(R, R.n(), c, inv));
    return r;
}

template <class K>
Sys<K> with_level(const Sys<K>& R, const RPoly<K>& monic)
{
    Sys<K> S = R;
    S.push_level(std::vector<El<K>>(monic.begin(), monic.end() - 1));
    return S;
}

template <class K>
[[noreturn]] void unhandled(int pos, bool inf, const std::string& why)
{
    fail(Errc::UnhandledFaceShape, "face " + std::to_string(pos + 1) + (inf ? "^inf" : "^0") + ": " + why);
}

template <class K>
bool eq_one(const El<K>& w)
{
    return alg::is_one(w);
}

// Checks a coordinate value on a face component: unit, and y = 1 only exactly.
template <class K>
void check_value(const Sys<K>& S, const El<K>& w, int pos, bool inf)
{
    if (!alg_is_unit(S, w)) unhandled<K>(pos, inf, "a coordinate is not a unit on the face");
    if (!invertible_over_F(S, alg::sub(w, alg::one(S, S.n())))) unhandled<K>(pos, inf, "a coordinate equals 1 on part of the face");
}

template <class K>
std::vector<El<K>> neg_level(const Sys<K>& F, const El<K>& w)
{
    return {alg::neg(alg::embed(F, w, F.n()))};
}

} // namespace wdetail

// The codimension-one face {y_pos = 0} (inf = false) or {y_pos = inf} of W, as a
// triangular system; nullopt when it is empty in the cube.
template <class K>
std::optional<Sys<K>> curve_face(const CurveWitness<K>& W, int pos, bool inf)
{
    using namespace wdetail;
    using Kind = typename Coord<K>::Kind;
    const Sys<K>& R = W.R;
    int r = R.n();
    int ncoord = static_cast<int>(W.coords.size());
    const auto& cp = W.coords[pos];

    if (cp.kind == Kind::Prefix) return std::nullopt;
    if (cp.kind == Kind::Const) {
        if (alg_is_unit(R, cp.w)) return std::nullopt;
        unhandled<K>(pos, inf, "constant coordinate is not a unit");
    }

    if (cp.kind == Kind::Free) {
        std::vector<El<K>> vals(ncoord);
        std::string err;
        for (int k = 0; k < ncoord; ++k) {
            const auto& c = W.coords[k];
            if (k == pos || c.kind == Kind::Prefix) continue;
            if (c.kind == Kind::Const) {
                vals[k] = c.w;
                continue;
            }
            RPoly<K> a = ptrim(c.a), b = ptrim(c.b);
            if (!inf) {
                El<K> a0 = a.empty() ? alg::zero(R, r) : a[0];
                El<K> b0 = b.empty() ? alg::zero(R, r) : b[0];
                if (!alg_is_unit(R, a0)) {
                    err = "denominator vanishes at x = 0";
                    continue;
                }
                vals[k] = alg::mul(R, r, b0, alg_inv(R, a0));
            } else {
                if (a.size() != b.size()) {
                    err = "coordinate tends to 0 or infinity at x = infinity";
                    continue;
                }
                if (!alg_is_unit(R, a.back())) {
                    err = "leading coefficient is not a unit";
                    continue;
                }
                vals[k] = alg::mul(R, r, b.back(), alg_inv(R, a.back()));
            }
        }
        for (int k = 0; k < ncoord; ++k)
            if (!vals[k].empty() && eq_one<K>(vals[k])) return std::nullopt;
        if (!err.empty()) unhandled<K>(pos, inf, err);
        Sys<K> F(R.proto);
        for (int k = 0; k < ncoord; ++k) {
            if (k == pos) continue;
            if (W.coords[k].kind == Kind::Prefix) {
                F.push_level(R.coef[F.n()]);
                continue;
            }
            check_value(R, vals[k], pos, inf);
            F.push_level(neg_level(F, vals[k]));
        }
        return F;
    }

    // Det coordinate
    RPoly<K> a = ptrim(cp.a), b = ptrim(cp.b);
    RPoly<K> phi = strip_xm1(R, inf ? a : b);
    const RPoly<K>& psi = inf ? b : a;
    int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;

    // points of the face over x = infinity
    if ((!inf && db < da) || (inf && db > da)) {
        bool one_at_inf = false;
        for (int k = 0; k < ncoord && !one_at_inf; ++k) {
            const auto& c = W.coords[k];
            if (k == pos) continue;
            if (c.kind == Kind::Const && eq_one<K>(c.w)) one_at_inf = true;
            if (c.kind == Kind::Det) {
                RPoly<K> ak = ptrim(c.a), bk = ptrim(c.b);
                if (ak.size() == bk.size() && alg::equal(ak.back(), bk.back())) one_at_inf = true;
            }
        }
        if (!one_at_inf) unhandled<K>(pos, inf, "face meets x = infinity");
    }

    if (phi.empty()) unhandled<K>(pos, inf, "curve lies in the face");
    if (phi.size() == 1) {
        if (alg_is_unit(R, phi[0])) return std::nullopt;
        unhandled<K>(pos, inf, "constant face equation is not a unit");
    }
    if (!alg_is_unit(R, phi.back())) unhandled<K>(pos, inf, "leading coefficient is not a unit");
    phi = monic_over(R, phi);
    if (!alg_is_unit(R, phi[0])) unhandled<K>(pos, inf, "face meets x = 0");
    Sys<K> S = with_level(R, phi);
    int L = S.n();
    El<K> rho = alg::var(S, L, r);
    El<K> oneS = alg::one(S, L);
    if (!invertible_over_F(S, alg::sub(rho, oneS))) unhandled<K>(pos, inf, "face meets x = 1");
    if (!invertible_over_F(S, peval(S, psi, rho))) unhandled<K>(pos, inf, "indeterminate point of the curve on the face");

    std::vector<El<K>> vals(ncoord);
    std::optional<Error> err;
    for (int k = 0; k < ncoord; ++k) {
        const auto& c = W.coords[k];
        if (k == pos || c.kind == Kind::Prefix || c.kind == Kind::Free) continue;
        if (c.kind == Kind::Const) {
            vals[k] = alg::embed(S, c.w, L);
            continue;
        }
        El<K> ak = peval(S, c.a, rho);
        if (!alg_is_unit(S, ak)) {
            err = Error(Errc::DenominatorNotUnit, "face " + std::to_string(pos + 1) + ": coordinate " + std::to_string(k + 1) + " has a non-unit denominator");
            continue;
        }
        vals[k] = alg::mul(S, L, peval(S, c.b, rho), alg_inv(S, ak));
    }
    for (int k = 0; k < ncoord; ++k)
        if (!vals[k].empty() && eq_one<K>(vals[k])) return std::nullopt;
    if (err) throw *err;

    Sys<K> F(R.proto);
    for (int k = 0; k < ncoord; ++k) {
        if (k == pos) continue;
        const auto& c = W.coords[k];
        if (c.kind == Kind::Prefix) {
            F.push_level(R.coef[F.n()]);
        } else if (c.kind == Kind::Free) {
            std::vector<El<K>> cs;
            for (size_t e = 0; e + 1 < phi.size(); ++e) cs.push_back(alg::embed(F, phi[e], F.n()));
            F.push_level(std::move(cs));
        } else {
            check_value(S, vals[k], pos, inf);
            F.push_level(neg_level(F, vals[k]));
        }
    }
    return F;
}

// Cubical boundary sum_i (-1)^i (d_i^inf - d_i^0) of the curve, times its sign.
template <class K>
CycleSum<K> boundary(const CurveWitness<K>& W)
{
    using Kind = typename Coord<K>::Kind;
    CycleSum<K> out(0);
    int r = W.R.n();
    int nfree = 0;
    for (int k = 0; k < static_cast<int>(W.coords.size()); ++k) {
        const auto& c = W.coords[k];
        if ((c.kind == Kind::Prefix) != (k < r)) fail(Errc::Precondition, "prefix coordinates must come first, one per prefix level");
        if (c.kind == Kind::Free) ++nfree;
        if (c.kind == Kind::Det && nfree == 0) fail(Errc::Precondition, "quotient coordinates must follow the curve parameter");
        if (c.kind == Kind::Det && wdetail::ptrim(c.a).size() == wdetail::ptrim(c.b).size()) {
            auto a = wdetail::ptrim(c.a), b = wdetail::ptrim(c.b);
            bool same = true;
            for (size_t e = 0; e < a.size() && same; ++e) same = alg::equal(a[e], b[e]);
            if (same) return out; // y = 1 identically: W is empty in the cube
        }
    }
    if (nfree != 1) fail(Errc::Precondition, "curve witness needs exactly one free parameter");
    auto adm = check_admissible(W.R);
    if (!adm.ok) fail(Errc::UnhandledFaceShape, "prefix algebra is not admissible: " + adm.reason);
    for (int pos = 0; pos < static_cast<int>(W.coords.size()); ++pos) {
        long s = (pos % 2 == 0) ? -W.sign : W.sign; // (-1)^{pos+1}, 1-based
        if (auto f = curve_face(W, pos, true)) out.add(*f, s);
        if (auto f = curve_face(W, pos, false)) out.add(*f, -s);
    }
    return out;
}

enum class WitnessKind { Bilinear, Steinberg, NormReduce, QStep };

inline std::string witness_kind_name(WitnessKind k)
{
    switch (k) {
    case WitnessKind::Bilinear: return "Bilinear";
    case WitnessKind::Steinberg: return "Steinberg";
    case WitnessKind::NormReduce: return "NormReduce";
    case WitnessKind::QStep: return "QStep";
    }
    return "?";
}

inline WitnessKind parse_witness_kind(const std::string& s)
{
    if (s == "Bilinear") return WitnessKind::Bilinear;
    if (s == "Steinberg") return WitnessKind::Steinberg;
    if (s == "NormReduce") return WitnessKind::NormReduce;
    if (s == "QStep") return WitnessKind::QStep;
    fail(Errc::InvalidInput, "unknown witness kind " + s);
}

template <class K>
struct Witness {
    WitnessKind kind = WitnessKind::Bilinear;
    std::map<std::string, std::string> params;
    CurveWitness<K> curve;
    // claimed boundary: sum of mult * system
    std::vector<std::pair<long, Sys<K>>> pieces;

    CycleSum<K> claimed(int prec = 0) const
    {
        CycleSum<K> c(prec);
        for (const auto& [m, S] : pieces) c.add(S, m);
        return c;
    }
};

struct VerifyReport {
    bool ok = true;
    std::string diff;
    // the boundary could not be computed: the curve is not in good position
    bool degenerate = false;
};

// Exact check, then the same identity at each requested truncation.
template <class K>
VerifyReport verify(const Witness<K>& W, const std::vector<int>& precisions = {})
{
    VerifyReport rep;
    CycleSum<K> bd;
    try {
        bd = boundary(W.curve);
    } catch (const Error& e) {
        bool gp = e.code() == Errc::UnhandledFaceShape || e.code() == Errc::DenominatorNotUnit;
        return {false, std::string("boundary failed: ") + e.what(), gp};
    }
    CycleSum<K> cl = W.claimed();
    if (bd != cl) return {false, "boundary " + bd.str() + " differs from claim " + cl.str()};
    for (int N : precisions) {
        auto b = bd.at_prec(N), c = cl.at_prec(N);
        if (b != c) return {false, "mod t^" + std::to_string(N) + ": " + b.str() + " vs " + c.str()};
    }
    return rep;
}

namespace wdetail {

template <class K>
std::string sym_str(const std::vector<RatFn<K>>& v)
{
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + "}";
}

template <class K>
RPoly<K> const_poly(const std::vector<RatFn<K>>& cs)
{
    RPoly<K> p;
    for (const auto& c : cs) p.push_back(El<K>{c});
    return p;
}

template <class K>
void require_unit(const RatFn<K>& a, const std::string& what)
{
    if (!a.is_unit()) fail(Errc::NonUnitParameter, what + " = " + a.str() + " is not a unit of A");
}

template <class K>
std::string join_sys(const Sys<K>& S)
{
    return join_polys(sys_strings(S));
}

} // namespace wdetail

// W = {(x, (f1 x - f1 f2)/(x - f1 f2), tail)}: boundary -G(f1,tail) - G(f2,tail) + G(f1 f2,tail).
template <class K>
Witness<K> make_bilinear(const RatFn<K>& f1, const RatFn<K>& f2, const std::vector<RatFn<K>>& tail)
{
    using namespace wdetail;
    require_unit(f1, "f1");
    require_unit(f2, "f2");
    for (const auto& c : tail) require_unit(c, "tail entry");
    const K& k = f1.field();
    Witness<K> W;
    W.kind = WitnessKind::Bilinear;
    W.params = {{"f1", f1.str()}, {"f2", f2.str()}, {"tail", sym_str(tail)}};
    W.curve.R = Sys<K>(RatFn<K>(k));
    RatFn<K> f12 = f1 * f2;
    W.curve.coords.push_back(Coord<K>::free());
    W.curve.coords.push_back(Coord<K>::det(const_poly<K>({-f12, RatFn<K>::from_int(k, 1)}), const_poly<K>({-f12, f1})));
    for (const auto& c : tail) W.curve.coords.push_back(Coord<K>::constant(El<K>{c}));
    auto G = [&](const RatFn<K>& a) {
        std::vector<RatFn<K>> v{a};
        v.insert(v.end(), tail.begin(), tail.end());
        return graph_system(k, v);
    };
    W.pieces = {{-1, G(f1)}, {-1, G(f2)}, {1, G(f12)}};
    return W;
}

// W = {(tb, x, 1 - x, (a - x)/(1 - x), ta)}: boundary (-1)^{pos+1} G(tb, a, 1 - a, ta),
// pos being the 1-based position of a.
template <class K>
Witness<K> make_steinberg(const RatFn<K>& a, int pos, const std::vector<RatFn<K>>& tail)
{
    using namespace wdetail;
    require_unit(a, "a");
    const K& k = a.field();
    RatFn<K> one = RatFn<K>::from_int(k, 1);
    if (!(one - a).is_unit()) fail(Errc::SteinbergDegenerate, "1 - a = " + (one - a).str() + " is not a unit of A");
    for (const auto& c : tail) require_unit(c, "tail entry");
    if (pos < 1 || pos > static_cast<int>(tail.size()) + 1) fail(Errc::InvalidInput, "Steinberg position out of range");
    Witness<K> W;
    W.kind = WitnessKind::Steinberg;
    W.params = {{"a", a.str()}, {"pos", std::to_string(pos)}, {"tail", sym_str(tail)}};
    W.curve.R = Sys<K>(RatFn<K>(k));
    std::vector<RatFn<K>> sym;
    for (int j = 0; j < pos - 1; ++j) {
        W.curve.coords.push_back(Coord<K>::constant(El<K>{tail[j]}));
        sym.push_back(tail[j]);
    }
    W.curve.coords.push_back(Coord<K>::free());
    W.curve.coords.push_back(Coord<K>::det(const_poly<K>({one}), const_poly<K>({one, -one})));
    W.curve.coords.push_back(Coord<K>::det(const_poly<K>({one, -one}), const_poly<K>({a, -one})));
    sym.push_back(a);
    sym.push_back(one - a);
    for (size_t j = pos - 1; j < tail.size(); ++j) {
        W.curve.coords.push_back(Coord<K>::constant(El<K>{tail[j]}));
        sym.push_back(tail[j]);
    }
    W.pieces = {{(pos % 2) ? 1 : -1, graph_system(k, sym)}};
    return W;
}

// For Z = {f(y) = 0}, n = 1: W = {(x, f(x)/((x-1)^{d-1}(x - a0)))} with a0 = (-1)^d f(0);
// boundary G(a0) - Z.
template <class K>
Witness<K> make_norm_reduce(const Sys<K>& Z)
{
    using namespace wdetail;
    if (Z.n() != 1) fail(Errc::Precondition, "NormReduce needs a one-variable cycle");
    auto adm = check_admissible(Z);
    if (!adm.ok) fail(Errc::NonUnitParameter, "cycle is not admissible: " + adm.reason);
    const K& k = Z.proto.field();
    int d = Z.deg[0];
    RatFn<K> one = RatFn<K>::from_int(k, 1);
    RatFn<K> p0 = Z.coef[0][0][0];
    RatFn<K> a0 = (d % 2) ? -p0 : p0;
    Sys<K> R{RatFn<K>(k)};
    RPoly<K> D = const_poly<K>({-a0, one});
    for (int j = 0; j < d - 1; ++j) D = pmul(R, D, const_poly<K>({-one, one}));
    RPoly<K> P;
    for (int e = 0; e < d; ++e) P.push_back(Z.coef[0][e]);
    P.push_back(El<K>{one});
    Witness<K> W;
    W.kind = WitnessKind::NormReduce;
    W.params = {{"f", sys_strings(Z)[0]}};
    W.curve.R = R;
    W.curve.coords = {Coord<K>::free(), Coord<K>::det(D, P)};
    W.pieces = {{1, graph_system(k, {a0})}, {-1, Z}};
    return W;
}

template <class K>
int qstep_index(const Sys<K>& Z)
{
    for (int l = Z.n(); l >= 1; --l)
        if (Z.deg[l - 1] > 1) return l;
    return 0;
}

// One degree-reduction step at level i (the last with d_i > 1). Claimed boundary
// Z - Z' + sum_j (-1)^{i+j} E_j, with Z' the substituted system y_i = c and E_j the
// components where a later coordinate meets 0.
template <class K>
Witness<K> make_qstep(const Sys<K>& Z, int i = 0)
{
    using namespace wdetail;
    int n = Z.n();
    if (i == 0) i = qstep_index(Z);
    if (i < 1 || i > n || Z.deg[i - 1] < 2) fail(Errc::Precondition, "QStep needs a level with degree > 1");
    for (int j = i + 1; j <= n; ++j)
        if (Z.deg[j - 1] != 1) fail(Errc::Precondition, "QStep needs degree 1 after level i");
    auto adm = check_admissible(Z);
    if (!adm.ok) fail(Errc::NonUnitParameter, "cycle is not admissible: " + adm.reason);

    const K& k = Z.proto.field();
    int d = Z.deg[i - 1];
    Sys<K> R = Z.prefix(i - 1);
    int r = R.n();
    El<K> oneR = alg::one(R, r);
    El<K> p0 = Z.coef[i - 1][0];
    El<K> c = (d % 2) ? alg::neg(p0) : p0;
    RPoly<K> xm1{alg::neg(oneR), oneR};
    RPoly<K> D{alg::neg(c), oneR};
    for (int j = 0; j < d - 1; ++j) D = pmul(R, D, xm1);
    RPoly<K> P(Z.coef[i - 1].begin(), Z.coef[i - 1].end());
    P.push_back(oneR);
    std::vector<RPoly<K>> g; // g_j for j = i+1..n, as polynomials in x over R
    for (int j = i + 1; j <= n; ++j) g.push_back(alg::as_upoly(Z, i - 1, alg::neg(Z.coef[j - 1][0])));

    Witness<K> W;
    W.kind = WitnessKind::QStep;
    W.params = {{"sys", join_sys(Z)}, {"i", std::to_string(i)}};
    W.curve.R = R;
    W.curve.sign = (i % 2) ? -1 : 1;
    for (int l = 0; l < r; ++l) W.curve.coords.push_back(Coord<K>::prefix());
    W.curve.coords.push_back(Coord<K>::free());
    W.curve.coords.push_back(Coord<K>::det(D, P));
    for (const auto& gj : g) W.curve.coords.push_back(Coord<K>::det(RPoly<K>{oneR}, gj));

    W.pieces.push_back({1, Z});
    // Z' = (prefix, y_i - c, y_j - g_j(c))
    Sys<K> Zp = R;
    Zp.push_level({alg::neg(c)});
    for (const auto& gj : g) Zp.push_level({alg::neg(alg::eval(R, r, gj, c))});
    W.pieces.push_back({-1, Zp});
    // E_j: x runs over the roots of g_j
    for (int j = i + 1; j <= n; ++j) {
        RPoly<K> phi = strip_xm1(R, g[j - i - 1]);
        if (phi.empty()) fail(Errc::UnhandledFaceShape, "tail coordinate vanishes identically");
        if (phi.size() == 1) {
            if (alg_is_unit(R, phi[0])) continue;
            fail(Errc::UnhandledFaceShape, "tail coordinate is a constant non-unit");
        }
        if (!alg_is_unit(R, phi.back())) fail(Errc::UnhandledFaceShape, "tail coordinate has a non-unit leading coefficient");
        phi = monic_over(R, phi);
        Sys<K> S = with_level(R, phi);
        int L = S.n();
        El<K> rho = alg::var(S, L, r);
        El<K> Drho = peval(S, D, rho);
        if (!alg_is_unit(S, Drho)) fail(Errc::DenominatorNotUnit, "E_" + std::to_string(j) + ": (x-1)^{d-1}(x-c) is not a unit at the roots of g_j");
        El<K> h = alg::mul(S, L, peval(S, P, rho), alg_inv(S, Drho));
        Sys<K> E = S;
        E.push_level({alg::neg(h)});
        for (int kk = i + 1; kk <= n; ++kk) {
            if (kk == j) continue;
            E.push_level({alg::neg(peval(S, g[kk - i - 1], rho))});
        }
        W.pieces.push_back({((i + j) % 2) ? -1 : 1, E});
    }
    return W;
}

// Inverse of the params map written by the make_* constructors.
template <class K>
Witness<K> rebuild_witness(const K& k, WitnessKind kind, const std::map<std::string, std::string>& params)
{
    auto get = [&](const std::string& key) -> const std::string& {
        auto it = params.find(key);
        if (it == params.end()) fail(Errc::InvalidInput, witness_kind_name(kind) + " witness is missing parameter " + key);
        return it->second;
    };
    auto tail = [&]() {
        std::vector<RatFn<K>> v;
        for (const auto& s : split_symbol(get("tail"))) v.push_back(parse_ratfn(k, s));
        return v;
    };
    auto sys = [&](const std::string& joined) {
        std::vector<std::string> polys;
        size_t pos = 0;
        for (;;) {
            size_t q = joined.find(';', pos);
            polys.push_back(joined.substr(pos, q == std::string::npos ? std::string::npos : q - pos));
            if (q == std::string::npos) break;
            pos = q + 1;
        }
        return parse_system(k, polys);
    };
    auto to_int = [&](const std::string& key) {
        try {
            return std::stoi(get(key));
        } catch (const std::logic_error&) {
            fail(Errc::InvalidInput, "parameter " + key + " is not an integer");
        }
    };
    switch (kind) {
    case WitnessKind::Bilinear: return make_bilinear(parse_ratfn(k, get("f1")), parse_ratfn(k, get("f2")), tail());
    case WitnessKind::Steinberg: return make_steinberg(parse_ratfn(k, get("a")), to_int("pos"), tail());
    case WitnessKind::NormReduce: return make_norm_reduce(sys(get("f")));
    case WitnessKind::QStep: return make_qstep(sys(get("sys")), to_int("i"));
    }
    fail(Errc::InvalidInput, "unknown witness kind");
}


} // namespace kmil

#endif
