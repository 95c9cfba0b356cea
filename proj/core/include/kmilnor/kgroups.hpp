#ifndef KMILNOR_KGROUPS_HPP
#define KMILNOR_KGROUPS_HPP

#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kmilnor/witness.hpp"

namespace kmil {

// Formal sum of Milnor symbols; prec > 0 keys entries modulo t^prec.
template <class K>
struct SymbolSum {
    int prec = 0;
    std::map<std::string, std::pair<std::vector<RatFn<K>>, long>> terms;

    SymbolSum() = default;
    explicit SymbolSum(int p) : prec(p) {}

    static std::string entry_str(const RatFn<K>& a, int prec) { return prec > 0 ? a.truncate(prec).str() : a.str(); }

    void add(std::vector<RatFn<K>> entries, long mult)
    {
        if (mult == 0) return;
        std::string key = "{";
        for (size_t i = 0; i < entries.size(); ++i) {
            if (prec > 0) entries[i] = RatFn<K>(entries[i].truncate(prec).to_poly());
            key += (i ? ", " : "") + entry_str(entries[i], prec);
        }
        key += "}";
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, std::make_pair(std::move(entries), mult));
            return;
        }
        it->second.second += mult;
        if (it->second.second == 0) terms.erase(it);
    }
    bool operator==(const SymbolSum& o) const
    {
        if (prec != o.prec || terms.size() != o.terms.size()) return false;
        for (const auto& [k, v] : terms) {
            auto it = o.terms.find(k);
            if (it == o.terms.end() || it->second.second != v.second) return false;
        }
        return true;
    }
    bool operator!=(const SymbolSum& o) const { return !(*this == o); }
    CycleSum<K> to_cycles(int cprec) const
    {
        CycleSum<K> c(cprec);
        for (const auto& [k, v] : terms) c.add(graph_system(v.first.front().field(), v.first), v.second);
        return c;
    }
    std::string str() const
    {
        if (terms.empty()) return "0";
        std::string out;
        for (const auto& [k, v] : terms) {
            long m = v.second;
            if (!out.empty()) out += m < 0 ? " - " : " + ";
            else if (m < 0) out += "-";
            long am = m < 0 ? -m : m;
            out += (am == 1 ? "" : std::to_string(am) + "*") + k;
        }
        return out;
    }
};

template <class K>
Sys<K> graph(const std::vector<RatFn<K>>& entries)
{
    if (entries.empty()) fail(Errc::InvalidInput, "empty symbol");
    for (const auto& a : entries)
        if (!a.is_unit()) fail(Errc::NonUnitEntry, "symbol entry " + a.str() + " is not a unit");
    return graph_system(entries.front().field(), entries);
}

template <class K>
RatFn<K> phi_n1(const Sys<K>& Z)
{
    if (Z.n() != 1) fail(Errc::Precondition, "phi_n1 needs n = 1");
    const RatFn<K>& p0 = Z.coef[0][0][0];
    return (Z.deg[0] % 2) ? -p0 : p0;
}

template <class K>
struct ReductionResult {
    Sys<K> input;
    long input_mult = 1;
    int m = 0;
    // graph outputs with multiplicities, exact coordinates
    std::vector<std::pair<long, std::vector<RatFn<K>>>> graphs;
    std::vector<std::pair<long, Witness<K>>> witnesses;
    // degree vectors of processed systems, in processing order
    std::vector<std::vector<int>> schedule;
    bool all_verified = true;
    bool decreasing = true;
    bool telescope_ok = true;
    bool degenerate = false; // some witness failed only for general-position reasons
    std::vector<bool> verified; // per entry of witnesses
    std::string diagnostics;

    SymbolSum<K> symbols(int prec) const
    {
        SymbolSum<K> s(prec);
        for (const auto& [c, e] : graphs) s.add(e, c);
        return s;
    }
    SymbolSum<K> symbols() const { return symbols(m + 1); }
    bool ok() const { return all_verified && decreasing && telescope_ok; }
};

namespace kdetail {

inline bool lex_less(const std::vector<int>& a, const std::vector<int>& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

template <class K>
struct Work {
    long coef;
    Sys<K> sys;
};

// One reduction step: either a graph read-off or a verified QStep with children.
template <class K>
void step(ReductionResult<K>& res, std::deque<Work<K>>& q, Work<K> w)
{
    auto st = strip_ones(w.sys);
    if (!st) return;
    Sys<K> S = std::move(*st);
    res.schedule.push_back(S.deg);
    if (is_graph(S)) {
        res.graphs.push_back({w.coef, graph_coords(S)});
        return;
    }
    Witness<K> W = make_qstep(S);
    auto rep = verify(W, {res.m + 1});
    if (!rep.ok) {
        res.all_verified = false;
        res.degenerate = res.degenerate || rep.degenerate;
        res.diagnostics += rep.diff + "\n";
    }
    for (size_t j = 1; j < W.pieces.size(); ++j) {
        const auto& [mult, child] = W.pieces[j];
        auto adm = check_admissible(child);
        if (!adm.ok) fail(Errc::DenominatorNotUnit, "reduction step produced a non-admissible cycle " + join_polys(sys_strings(child)) + ": " + adm.reason);
        if (!lex_less(child.deg, S.deg)) res.decreasing = false;
        // claim: dW = Z - Z' + sum s_j E_j, so Z = Z' - sum s_j E_j + dW
        q.push_back({j == 1 ? w.coef : -w.coef * mult, child});
    }
    res.witnesses.push_back({w.coef, std::move(W)});
    res.verified.push_back(rep.ok);
}

template <class K>
void check_telescope(ReductionResult<K>& res)
{
    CycleSum<K> lhs(0), rhs(0);
    lhs.add(res.input, res.input_mult);
    for (const auto& [c, e] : res.graphs) lhs.add(graph_system(res.input.proto.field(), e), -c);
    for (const auto& [c, W] : res.witnesses) rhs.add(W.claimed(), c);
    if (lhs != rhs) {
        res.telescope_ok = false;
        res.diagnostics += "telescope mismatch: " + lhs.str() + " vs " + rhs.str() + "\n";
    }
}

} // namespace kdetail

// Degree reduction to graph cycles with a verified witness per step; the witnesses
// telescope: mult * Z - sum(graphs) = sum coef * dW.
template <class K>
ReductionResult<K> reduce_to_graphs(const Sys<K>& Z, int m, long mult = 1)
{
    auto adm = check_admissible(Z);
    if (!adm.ok) fail(Errc::Precondition, "reduce_to_graphs needs an admissible cycle: level " + std::to_string(adm.level) + ": " + adm.reason);
    ReductionResult<K> res;
    res.input = Z;
    res.input_mult = mult;
    res.m = m;
    std::deque<kdetail::Work<K>> q;
    q.push_back({mult, Z});
    while (!q.empty()) {
        auto w = std::move(q.front());
        q.pop_front();
        kdetail::step(res, q, std::move(w));
    }
    kdetail::check_telescope(res);
    return res;
}

template <class K>
struct PairResult {
    ReductionResult<K> first, second;
    bool pairwise_equiv = true;
};

// Lockstep reduction of two mod t^{m+1}-equivalent cycles.
template <class K>
PairResult<K> reduce_pair(const Sys<K>& Z1, const Sys<K>& Z2, int m)
{
    if (Z1.deg != Z2.deg || !mod_equiv(Z1, Z2, m + 1)) fail(Errc::Precondition, "reduce_pair needs mod t^{m+1}-equivalent inputs");
    for (const auto* Z : {&Z1, &Z2}) {
        auto adm = check_admissible(*Z);
        if (!adm.ok) fail(Errc::Precondition, "reduce_pair needs admissible cycles: " + adm.reason);
    }
    PairResult<K> pr;
    auto& a = pr.first;
    auto& b = pr.second;
    a.input = Z1;
    b.input = Z2;
    a.m = b.m = m;
    std::deque<kdetail::Work<K>> qa, qb;
    qa.push_back({1, Z1});
    qb.push_back({1, Z2});
    while (!qa.empty() || !qb.empty()) {
        if (qa.empty() || qb.empty()) fail(Errc::PairDiverged, "work lists diverged");
        auto wa = std::move(qa.front());
        auto wb = std::move(qb.front());
        qa.pop_front();
        qb.pop_front();
        if (wa.coef != wb.coef) fail(Errc::PairDiverged, "multiplicities diverged");
        size_t ga = a.graphs.size(), gb = b.graphs.size();
        size_t sa = a.schedule.size(), sb = b.schedule.size();
        kdetail::step(a, qa, std::move(wa));
        kdetail::step(b, qb, std::move(wb));
        if (a.schedule.size() - sa != b.schedule.size() - sb) fail(Errc::PairDiverged, "one side became empty");
        if (a.schedule.size() > sa && a.schedule.back() != b.schedule.back()) fail(Errc::PairDiverged, "degree vectors diverged");
        if (qa.size() != qb.size()) fail(Errc::PairDiverged, "different numbers of children");
        if (a.graphs.size() - ga != b.graphs.size() - gb) fail(Errc::PairDiverged, "graph read-off diverged");
        if (a.graphs.size() > ga) {
            auto Ga = graph_system(Z1.proto.field(), a.graphs.back().second);
            auto Gb = graph_system(Z1.proto.field(), b.graphs.back().second);
            if (!mod_equiv(Ga, Gb, m + 1)) pr.pairwise_equiv = false;
        }
    }
    kdetail::check_telescope(a);
    kdetail::check_telescope(b);
    if (a.symbols() != b.symbols()) pr.pairwise_equiv = false;
    return pr;
}

template <class K>
struct NormResult {
    Sys<K> cycle;
    long mult = 1;
    ReductionResult<K> reduction;

    SymbolSum<K> symbols() const { return reduction.symbols(); }
};

// Push-forward of a point along the finite map to X: triangularize, then reduce.
template <class K>
NormResult<K> norm_point(const PointRep<K>& pt, int m)
{
    NormResult<K> r;
    std::tie(r.cycle, r.mult) = triangularize(pt);
    r.reduction = reduce_to_graphs(r.cycle, m, r.mult);
    return r;
}

template <class K>
PointRep<K> symbol_point(const K& k, const std::string& ext, const std::vector<std::string>& entries, int m)
{
    return base_change_point(k, ext.empty() ? std::string("x-1") : ext, entries, m + 1);
}

template <class K>
NormResult<K> norm(const K& k, const std::string& ext, const std::vector<std::string>& entries, int m)
{
    return norm_point(symbol_point(k, ext, entries, m), m);
}

// Classical norm over k: the same pipeline with coefficients constant in t.
template <class K>
NormResult<K> field_norm(const K& k, const std::string& ext, const std::vector<std::string>& entries)
{
    auto pt = symbol_point(k, ext, entries, 0);
    for (const auto& c : pt.coords)
        for (const auto& a : c)
            if (!a.num.is_constant() || !a.den.is_constant()) fail(Errc::InvalidInput, "field_norm entries must not involve t");
    return norm_point(pt, 0);
}

// Product of the n = 1 output symbols in k_{prec}.
template <class K>
TruncSeries<K> fold_n1(const K& k, const SymbolSum<K>& s, int prec)
{
    TruncSeries<K> acc = TruncSeries<K>::constant(k, prec, k.one());
    for (const auto& [key, v] : s.terms) {
        if (v.first.size() != 1) fail(Errc::Precondition, "fold_n1 needs one-entry symbols");
        TruncSeries<K> u = v.first[0].truncate(prec);
        long e = v.second;
        if (e < 0) {
            u = u.inv();
            e = -e;
        }
        acc = acc * u.pow(static_cast<uint64_t>(e));
    }
    return acc;
}

// Determinant of multiplication by u on k'_{m+1} as a free k_{m+1}-module.
template <class K>
TruncSeries<K> norm_n1_oracle(const K& k, const std::string& ext, const std::string& u, int m)
{
    auto pt = symbol_point(k, ext, {u}, m);
    auto T = truncate_sys(pt.algebra, m + 1);
    auto M = alg::mul_matrix(T, T.n(), alg::map_elem<TruncSeries<K>>(pt.coords[0], [&](const RatFn<K>& c) { return c.truncate(m + 1); }));
    return det(M, TruncSeries<K>(k, m + 1));
}

template <class K>
bool entry_is_relative(const El<K>& e, int r)
{
    for (size_t i = 0; i < e.size(); ++i) {
        RatFn<K> c = i == 0 ? e[i] - RatFn<K>::from_int(e[i].field(), 1) : e[i];
        if (!c.truncate(r).is_zero()) return false;
    }
    return true;
}

template <class K>
struct TraceResult {
    NormResult<K> norm;
    bool relative_ok = true; // every output graph has vanishing order >= r
};

template <class K>
TraceResult<K> trace_relative(const K& k, const std::string& ext, const std::vector<std::string>& entries, int m, int r)
{
    if (r < 1 || r > m + 1) fail(Errc::Precondition, "trace_relative needs 1 <= r <= m+1");
    auto pt = symbol_point(k, ext, entries, m);
    bool rel = false;
    for (const auto& c : pt.coords) rel = rel || entry_is_relative(c, r);
    if (!rel) fail(Errc::NotRelative, "no entry is congruent to 1 mod t^" + std::to_string(r));
    TraceResult<K> tr;
    tr.norm = norm_point(pt, m);
    for (const auto& [key, v] : tr.norm.symbols().terms)
        if (vanishing_order(graph_system(k, v.first), m) < r) tr.relative_ok = false;
    return tr;
}

// Relative norm of u from the top level of a two-level tower to its base level.
// When u has degree > 1 over the base the value is certified by the QStep witness
// at the top level, which is returned alongside.
template <class K>
std::pair<El<K>, std::optional<Witness<K>>> relative_norm_n1(const Sys<K>& tower, const El<K>& u)
{
    if (tower.n() != 2) fail(Errc::Precondition, "relative_norm_n1 needs a two-level tower");
    PointRep<K> pt;
    pt.algebra = tower;
    pt.coords = {alg::var(tower, 2, 0), u};
    auto [T, mult] = triangularize(pt);
    Sys<K> base = tower.prefix(1);
    if (!(T.prefix(1) == base)) fail(Errc::Precondition, "tower base level must be generated by its variable");
    El<K> c;
    std::optional<Witness<K>> wit;
    if (T.deg[1] == 1) {
        c = alg::neg(T.coef[1][0]);
    } else {
        Witness<K> W = make_qstep(T, 2);
        auto rep = verify(W);
        if (!rep.ok) fail(Errc::Precondition, "relative norm witness failed: " + rep.diff);
        c = alg::neg(W.pieces[1].second.coef[1][0]);
        wit = std::move(W);
    }
    return {alg::pow(base, 1, c, static_cast<uint64_t>(mult)), std::move(wit)};
}

} // namespace kmil

#endif
