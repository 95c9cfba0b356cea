#ifndef KMIL_TOOLS_SUITES_HPP
#define KMIL_TOOLS_SUITES_HPP

#include <functional>
#include <string>

#include "io.hpp"
#include "kmilnor/random.hpp"

namespace kmil::suites {

using io::json;

enum class Status { Pass, Skip, Fail };

struct CaseResult {
    Status status = Status::Pass;
    std::string what;
    json inputs = json::object();

    void expect(bool cond, const std::string& msg)
    {
        if (!cond && status != Status::Fail) {
            status = Status::Fail;
            what = msg;
        }
    }
    void skip(const std::string& msg)
    {
        if (status == Status::Pass) {
            status = Status::Skip;
            what = msg;
        }
    }
};

struct SuiteReport {
    long passed = 0, skipped = 0, failed = 0;
    json reproducer; // null when nothing failed
};

template <class K>
using CaseFn = std::function<void(CaseResult&, const K&, int m, uint64_t seed)>;

// Runs iters cases with per-case seeds case_seed(seed, i). The first failure is
// shrunk by retrying its seed at smaller m.
template <class K>
SuiteReport run_suite(const std::string& name, const K& k, int m, uint64_t seed, long iters, const CaseFn<K>& fn)
{
    auto guarded = [&](int mm, uint64_t s) {
        CaseResult r;
        try {
            fn(r, k, mm, s);
        } catch (const Error& e) {
            r.status = Status::Fail;
            r.what = e.what();
        }
        return r;
    };
    SuiteReport rep;
    for (long i = 0; i < iters; ++i) {
        uint64_t s = case_seed(seed, static_cast<uint64_t>(i));
        CaseResult r = guarded(m, s);
        if (r.status == Status::Pass) ++rep.passed;
        if (r.status == Status::Skip) ++rep.skipped;
        if (r.status != Status::Fail) continue;
        ++rep.failed;
        if (!rep.reproducer.is_null()) continue;
        int mm = m;
        for (int t = 1; t < m; ++t) {
            CaseResult rt = guarded(t, s);
            if (rt.status == Status::Fail) {
                mm = t;
                r = rt;
                break;
            }
        }
        rep.reproducer = {{"suite", name}, {"field", k.tag()}, {"m", mm}, {"master_seed", seed}, {"case", i}, {"case_seed", s}, {"failure", r.what}, {"inputs", r.inputs}};
    }
    return rep;
}

// Ring axioms, factor round trip, ideal property, ghost homomorphism when defined.
template <class K>
void witt_case(CaseResult& c, const K& k, int m, uint64_t seed)
{
    SplitMix64 r(seed);
    auto x = random_witt(r, k, m), y = random_witt(r, k, m), z = random_witt(r, k, m);
    c.inputs = {{"x", x.str()}, {"y", y.str()}, {"z", z.str()}};
    auto one = WittVector<K>::one(k, m);
    c.expect(witt_add(x, y) == witt_add(y, x), "add is not commutative");
    c.expect(witt_add(witt_add(x, y), z) == witt_add(x, witt_add(y, z)), "add is not associative");
    c.expect(witt_star(x, y) == witt_star(y, x), "star is not commutative");
    c.expect(witt_star(witt_star(x, y), z) == witt_star(x, witt_star(y, z)), "star is not associative");
    c.expect(witt_star(x, witt_add(y, z)) == witt_add(witt_star(x, y), witt_star(x, z)), "star does not distribute over add");
    c.expect(witt_star(x, one) == x, "1-t is not a star identity");
    c.expect(witt_from_factors(k, m, witt_factor(x)) == x, "factor round trip");
    int lv = 1 + static_cast<int>(r.below(static_cast<uint64_t>(m)));
    TruncSeries<K> us = TruncSeries<K>::constant(k, m + 1, k.one());
    for (int i = lv; i <= m; ++i) us.c[i] = random_elem(r, k);
    WittVector<K> u(us);
    c.inputs["u"] = u.str();
    c.expect(vanishing_level(witt_star(x, u)) >= vanishing_level(u), "ideal property");
    if (ghost_defined(k, m)) {
        auto gx = ghost(x), gy = ghost(y), gs = ghost(witt_star(x, y)), ga = ghost(witt_add(x, y));
        for (int n = 0; n < m; ++n) {
            c.expect(k.eq(gs[n], k.mul(gx[n], gy[n])), "ghost is not multiplicative");
            c.expect(k.eq(ga[n], k.add(gx[n], gy[n])), "ghost is not additive");
        }
    }
}

template <class K>
int cycle_degree_cap()
{
    return K::rational ? 2 : 3;
}

// Admissibility of projections, the graph vanishing criterion, perturbation invariance.
template <class K>
void cycles_case(CaseResult& c, const K& k, int m, uint64_t seed)
{
    SplitMix64 r(seed);
    int n = 1 + static_cast<int>(r.below(3));
    auto Z = random_admissible(r, k, n, cycle_degree_cap<K>(), 2);
    c.inputs = {{"polys", sys_strings(Z)}};
    c.expect(check_admissible(Z).ok, "generated cycle is not admissible");
    for (int i = 1; i <= n; ++i) c.expect(check_admissible(compact_project(Z, i)).ok, "projection is not admissible");
    auto Zp = perturb(r, Z, m + 1, 2);
    c.expect(mod_equiv(Z, Zp, m + 1), "perturbation is not mod-equivalent");
    CycleSum<K> a(m + 1), b(m + 1);
    a.add(Z, 1);
    b.add(Zp, 1);
    c.expect(a == b, "mod t^{m+1} keys differ after perturbation");

    std::vector<RatFn<K>> ent;
    for (int i = 0; i < n; ++i) {
        if (r.below(2)) {
            ent.push_back(random_one_unit(r, k, 1 + static_cast<int>(r.below(static_cast<uint64_t>(m + 1))), 2));
        } else {
            RatFn<K> u;
            int tries = 0;
            do {
                u = random_unit(r, k, 2);
            } while (k.is_one(u.at0()) && ++tries < 50);
            ent.push_back(u);
        }
    }
    json ej = json::array();
    for (const auto& e : ent) ej.push_back(e.str());
    c.inputs["graph_entries"] = ej;
    int v = vanishing_order(graph(ent), m);
    for (int rr = 1; rr <= m + 1; ++rr) {
        bool some = false;
        for (const auto& e : ent) some = some || (e - RatFn<K>::from_int(k, 1)).truncate(rr).is_zero();
        c.expect((v >= rr) == some, "graph vanishing order disagrees with entries at r = " + std::to_string(rr));
    }
    std::vector<RatFn<K>> ent0;
    for (const auto& e : ent) ent0.push_back(RatFn<K>::constant(k, e.at0()));
    c.expect(specialize(graph(ent)) == specialize(graph(ent0)), "specialization of a graph");
}

inline bool general_position_error(const Error& e)
{
    return e.code() == Errc::UnhandledFaceShape || e.code() == Errc::DenominatorNotUnit;
}

template <class K>
void check_witness(CaseResult& c, const K& k, const Witness<K>& W, const std::string& label)
{
    auto rep = verify(W, {1, 2});
    if (rep.degenerate) {
        c.skip(label + " not in good position: " + rep.diff);
        return;
    }
    c.expect(rep.ok, label + ": " + rep.diff);
    auto R = rebuild_witness(k, W.kind, W.params);
    c.expect(R.claimed().str() == W.claimed().str(), label + " does not rebuild from its log record");
}

// The four witness families, then a full reduction with its telescope.
template <class K>
void witness_case(CaseResult& c, const K& k, int m, uint64_t seed)
{
    SplitMix64 r(seed);
    auto tail = [&]() {
        std::vector<RatFn<K>> t;
        int len = static_cast<int>(r.below(3));
        for (int j = 0; j < len; ++j) t.push_back(random_unit(r, k, 2, r.below(2) == 1));
        return t;
    };
    auto f1 = random_unit(r, k, 2, r.below(2) == 1), f2 = random_unit(r, k, 2, r.below(2) == 1);
    auto tb = tail();
    auto Wb = make_bilinear(f1, f2, tb);
    c.inputs["bilinear"] = io::witness_record(1, Wb, false)["params"];
    check_witness(c, k, Wb, "Bilinear");

    RatFn<K> one = RatFn<K>::from_int(k, 1), a;
    bool found = false;
    for (int t = 0; t < 50 && !found; ++t) {
        a = random_unit(r, k, 2, r.below(2) == 1);
        found = (one - a).is_unit();
    }
    if (found) { // never over F_2
        auto ts = tail();
        int pos = 1 + static_cast<int>(r.below(ts.size() + 1));
        auto W = make_steinberg(a, pos, ts);
        c.inputs["steinberg"] = io::witness_record(1, W, false)["params"];
        check_witness(c, k, W, "Steinberg");
    }

    auto Z1 = random_admissible(r, k, 1, 4, 2);
    c.inputs["norm_reduce"] = sys_strings(Z1);
    check_witness(c, k, make_norm_reduce(Z1), "NormReduce");

    int cap = cycle_degree_cap<K>();
    auto Z = random_admissible(r, k, 1 + static_cast<int>(r.below(3)), cap, 2);
    c.inputs["cycle"] = sys_strings(Z);
    if (qstep_index(Z)) {
        try {
            check_witness(c, k, make_qstep(Z), "QStep");
        } catch (const Error& e) {
            if (!general_position_error(e)) throw;
            c.skip(std::string("QStep: ") + e.what());
        }
    }
    try {
        auto res = reduce_to_graphs(Z, m);
        if (res.degenerate) {
            c.skip("reduction met a witness not in good position");
        } else {
            c.expect(res.all_verified, "reduction witness: " + res.diagnostics);
            c.expect(res.decreasing, "degree vectors do not decrease");
            c.expect(res.telescope_ok, "telescope: " + res.diagnostics);
        }
    } catch (const Error& e) {
        if (!general_position_error(e)) throw;
        c.skip(std::string("reduction: ") + e.what());
    }
}

// n = 1 norms against the determinant oracle, multiplicativity, specialization.
template <class K>
void norms_case(CaseResult& c, const K& k, int m, uint64_t seed)
{
    SplitMix64 r(seed);
    int d = 1 + static_cast<int>(r.below(4));
    auto g = random_irreducible(r, k, d);
    auto u = random_ext_unit(r, k, d, m), v = random_ext_unit(r, k, d, m);
    std::string gs = x_string(k, g), us = xt_string(k, u), vs = xt_string(k, v);
    c.inputs = {{"ext", gs}, {"u", us}, {"v", vs}};
    try {
        auto nu = norm(k, gs, {us}, m), nv = norm(k, gs, {vs}, m), nuv = norm(k, gs, {"(" + us + ")*(" + vs + ")"}, m);
        for (const auto* nr : {&nu, &nv, &nuv}) {
            if (nr->reduction.degenerate) {
                c.skip("norm reduction met a witness not in good position");
                return;
            }
            c.expect(nr->reduction.ok(), "norm witnesses: " + nr->reduction.diagnostics);
        }
        auto fu = fold_n1(k, nu.symbols(), m + 1), fv = fold_n1(k, nv.symbols(), m + 1);
        c.expect(fu == norm_n1_oracle(k, gs, us, m), "norm differs from the determinant: " + fu.str());
        c.expect(fold_n1(k, nuv.symbols(), m + 1) == fu * fv, "norm is not multiplicative");
        auto u0 = u;
        for (auto& row : u0) row.resize(1);
        auto fn = field_norm(k, gs, {xt_string(k, u0)});
        c.expect(k.eq(fold_n1(k, fn.symbols(), 1).c[0], fu.c[0]), "norm does not commute with specialization");
    } catch (const Error& e) {
        if (!general_position_error(e)) throw;
        c.skip(e.what());
    }
}

template <class K>
CaseFn<K> suite_fn(const std::string& name)
{
    if (name == "witt") return witt_case<K>;
    if (name == "cycles") return cycles_case<K>;
    if (name == "witness") return witness_case<K>;
    if (name == "norms") return norms_case<K>;
    fail(Errc::InvalidInput, "unknown suite " + name + " (expected witt, cycles, witness or norms)");
}

} // namespace kmil::suites

#endif
