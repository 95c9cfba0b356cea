// Acceptance run: one PASS/FAIL line per criterion, exact equality, wall-clock limits.

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "kmilnor/kgroups.hpp"
#include "kmilnor/random.hpp"
#include "oracles.hpp"

using namespace kmil;

namespace {

constexpr uint64_t kBigP = 2147483647ULL; // 2^31 - 1

struct Outcome {
    bool ok = true;
    std::string note;
    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

// Independent norm: Leibniz determinant of multiplication on k_{m+1}[x]/(g).
TruncSeries<PrimeField> leibniz_norm(const PrimeField& k, const std::vector<PrimeField::Elem>& g, const std::vector<std::vector<PrimeField::Elem>>& u, int N)
{
    std::vector<TruncSeries<PrimeField>> us;
    for (const auto& ui : u) us.push_back(TruncSeries<PrimeField>(k, N, ui));
    return oracle::leibniz_det(oracle::mult_matrix<PrimeField>(us, g), TruncSeries<PrimeField>(k, N));
}

// ---------------------------------------------------------------------------

Outcome crit1()
{
    Outcome o;
    for (uint64_t p : {2, 3, 5, 7}) {
        PrimeField F(p);
        SplitMix64 r(case_seed(1, p));
        for (int it = 0; it < 200; ++it) {
            int m = 1 + static_cast<int>(r.below(8));
            auto x = random_witt(r, F, m), y = random_witt(r, F, m), z = random_witt(r, F, m);
            auto one = WittVector<PrimeField>::one(F, m);
            o.expect(witt_add(x, y) == witt_add(y, x), "add commutativity");
            o.expect(witt_add(witt_add(x, y), z) == witt_add(x, witt_add(y, z)), "add associativity");
            o.expect(witt_star(x, y) == witt_star(y, x), "star commutativity p=" + std::to_string(p));
            o.expect(witt_star(witt_star(x, y), z) == witt_star(x, witt_star(y, z)), "star associativity p=" + std::to_string(p));
            o.expect(witt_star(x, witt_add(y, z)) == witt_add(witt_star(x, y), witt_star(x, z)), "distributivity p=" + std::to_string(p));
            o.expect(witt_star(x, one) == x && witt_star(one, x) == x, "identity 1-t");
        }
    }
    return o;
}

// ghost components from -t s'/s, computed by the coefficient recursion
template <class K>
std::vector<typename K::Elem> logder_ghost(const WittVector<K>& x)
{
    const K& k = x.field();
    int m = x.m();
    std::vector<typename K::Elem> w(m + 1, k.zero());
    for (int n = 1; n <= m; ++n) {
        auto v = k.neg(k.mul(k.from_int(n), x.s.c[n]));
        for (int j = 1; j < n; ++j) v = k.sub(v, k.mul(w[j], x.s.c[n - j]));
        w[n] = v;
    }
    return std::vector<typename K::Elem>(w.begin() + 1, w.end());
}

template <class K>
void ghost_suite(Outcome& o, const K& k, uint64_t seed)
{
    SplitMix64 r(seed);
    for (int it = 0; it < 100; ++it) {
        int m = 1 + static_cast<int>(r.below(8));
        auto x = random_witt(r, k, m), y = random_witt(r, k, m);
        auto gx = ghost(x), gy = ghost(y);
        o.expect(gx == logder_ghost(x) && gy == logder_ghost(y), "ghost vs log-derivative");
        auto gs = ghost(witt_star(x, y)), ga = ghost(witt_add(x, y));
        for (int n = 0; n < m; ++n) {
            o.expect(k.eq(gs[n], k.mul(gx[n], gy[n])), "ghost multiplicative over " + k.tag());
            o.expect(k.eq(ga[n], k.add(gx[n], gy[n])), "ghost additive over " + k.tag());
        }
    }
}

Outcome crit2()
{
    Outcome o;
    ghost_suite(o, RationalField(), case_seed(2, 0));
    ghost_suite(o, PrimeField(11), case_seed(2, 11));
    return o;
}

Outcome crit3()
{
    Outcome o;
    const uint64_t primes[] = {2, 3, 5, 7, 11, 13};
    for (int it = 0; it < 500; ++it) {
        SplitMix64 r(case_seed(3, it));
        int m = 1 + static_cast<int>(r.below(8));
        auto check = [&](const auto& k) {
            auto x = random_witt(r, k, m);
            auto a = witt_factor(x);
            auto acc = TruncSeries<std::decay_t<decltype(k)>>::constant(k, m + 1, k.one());
            for (int i = 1; i <= m; ++i) {
                auto f = TruncSeries<std::decay_t<decltype(k)>>::constant(k, m + 1, k.one());
                f.c[i] = k.sub(f.c[i], a[i - 1]);
                acc = acc * f;
            }
            o.expect(acc == x.s, "factor round trip over " + k.tag());
        };
        if (it % 4 == 0)
            check(RationalField());
        else
            check(PrimeField(primes[it % 6]));
    }
    return o;
}

Outcome crit4()
{
    Outcome o;
    PrimeField F7(7), FB(kBigP);
    RationalField Q;
    for (int it = 0; it < 200; ++it) {
        SplitMix64 r(case_seed(4, it));
        auto tail_of = [&](const auto& k) {
            std::vector<RatFn<std::decay_t<decltype(k)>>> tail;
            int len = static_cast<int>(r.below(3));
            for (int j = 0; j < len; ++j) tail.push_back(random_unit(r, k, 2, r.below(2) == 1));
            return tail;
        };
        auto run = [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            // Bilinear
            auto f1 = random_unit(r, k, 2, r.below(2) == 1), f2 = random_unit(r, k, 2, r.below(2) == 1);
            auto wb = make_bilinear(f1, f2, tail_of(k));
            auto vb = verify(wb, {1, 2, 3});
            o.expect(vb.ok, "Bilinear: " + vb.diff);
            // Steinberg
            RatFn<K> a;
            do {
                a = random_unit(r, k, 2, r.below(2) == 1);
            } while (!(RatFn<K>::from_int(k, 1) - a).is_unit());
            auto tail = tail_of(k);
            int pos = 1 + static_cast<int>(r.below(tail.size() + 1));
            auto vs = verify(make_steinberg(a, pos, tail), {1, 2, 3});
            o.expect(vs.ok, "Steinberg: " + vs.diff);
        };
        if (it % 2)
            run(F7);
        else
            run(Q);
        // NormReduce and QStep over a large prime field
        auto Z1 = random_admissible(r, FB, 1, 4, 2);
        auto vn = verify(make_norm_reduce(Z1), {1, 2, 3});
        o.expect(vn.ok, "NormReduce: " + vn.diff);
        Sys<PrimeField> Z;
        do {
            Z = random_admissible(r, FB, 1 + static_cast<int>(r.below(3)), 3, 2);
        } while (qstep_index(Z) == 0);
        try {
            auto vq = verify(make_qstep(Z), {1, 2, 3});
            o.expect(vq.ok, "QStep: " + vq.diff);
        } catch (const Error& e) {
            o.expect(false, std::string("QStep: ") + e.what());
        }
    }
    return o;
}

Outcome crit5()
{
    Outcome o;
    for (int it = 0; it < 200; ++it) {
        SplitMix64 r(case_seed(5, it));
        const uint64_t primes[] = {2, 3, 5, 7};
        PrimeField F(primes[it % 4]);
        int d = 1 + static_cast<int>(r.below(4));
        int m = 1 + static_cast<int>(r.below(6));
        auto g = random_irreducible(r, F, d);
        auto u = random_ext_unit(r, F, d, m);
        try {
            auto nr = norm(F, x_string(F, g), {xt_string(F, u)}, m);
            o.expect(nr.reduction.ok(), "reduction witnesses");
            auto got = fold_n1(F, nr.symbols(), m + 1);
            o.expect(got == leibniz_norm(F, g, u, m + 1), "norm vs determinant over F_" + std::to_string(F.p));
            o.expect(got == norm_n1_oracle(F, x_string(F, g), xt_string(F, u), m), "norm vs library determinant");
        } catch (const Error& e) {
            o.expect(false, e.what());
        }
    }
    return o;
}

Outcome crit6()
{
    Outcome o;
    const uint64_t primes[] = {2, 3, 5, 7};
    for (int it = 0; it < 100; ++it) {
        SplitMix64 r(case_seed(6, it));
        PrimeField F(primes[it % 4]);
        int m = 1 + static_cast<int>(r.below(4));
        // k' = k[z]/(h), k'' = k'[x]/(x^2 + c x - z), so k'' = k[x]/(h(x^2 + c x))
        std::vector<PrimeField::Elem> h, g4;
        PrimeField::Elem c = 0;
        for (;;) {
            h = random_irreducible(r, F, 2);
            c = random_elem(r, F);
            Poly<PrimeField> H(F, h), q(F, std::vector<PrimeField::Elem>{0, c, 1});
            Poly<PrimeField> G = Poly<PrimeField>::constant(F, h[0]) + Poly<PrimeField>::constant(F, h[1]) * q + q * q;
            if (G.deg() == 4 && is_irreducible(G)) {
                g4 = G.c;
                break;
            }
        }
        auto u = random_ext_unit(r, F, 4, m);
        std::string us = xt_string(F, u);
        try {
            // one step over k''/k
            auto one = fold_n1(F, norm(F, x_string(F, g4), {us}, m).symbols(), m + 1);
            // two steps: k''/k' by the QStep witness at the top of the tower, then k'/k
            Sys<PrimeField> tower{RatFn<PrimeField>(F)};
            tower.push_level({El<PrimeField>{RatFn<PrimeField>::constant(F, h[0])}, El<PrimeField>{RatFn<PrimeField>::constant(F, h[1])}});
            tower.push_level({El<PrimeField>{RatFn<PrimeField>::from_int(F, 0), RatFn<PrimeField>::from_int(F, -1)}, El<PrimeField>{RatFn<PrimeField>::constant(F, c), RatFn<PrimeField>::from_int(F, 0)}});
            std::vector<int> slots(kNumVars, -1);
            slots[0] = 1;
            auto ut = parse_alg_elem(tower, us, slots, m + 1);
            auto [mid, wit] = relative_norm_n1(tower, ut);
            PointRep<PrimeField> pt;
            pt.algebra = tower.prefix(1);
            pt.coords = {mid};
            auto two = fold_n1(F, norm_point(pt, m).symbols(), m + 1);
            o.expect(one == two, "two-step norm differs over F_" + std::to_string(F.p));
            o.expect(one == leibniz_norm(F, g4, u, m + 1), "one-step norm vs determinant");
        } catch (const Error& e) {
            o.expect(false, e.what());
        }
    }
    return o;
}

Outcome crit7()
{
    Outcome o;
    PrimeField F(kBigP);
    for (int it = 0; it < 200; ++it) {
        SplitMix64 r(case_seed(7, it));
        int n = 1 + static_cast<int>(r.below(3));
        int m = 1 + static_cast<int>(r.below(4));
        auto Z = random_admissible(r, F, n, 3, 2);
        try {
            auto res = reduce_to_graphs(Z, m);
            o.expect(res.all_verified, "witness failed: " + res.diagnostics);
            o.expect(res.decreasing, "degree vectors not decreasing");
            o.expect(res.telescope_ok, "telescope: " + res.diagnostics);
            for (const auto& g : res.graphs) o.expect(g.second.size() == static_cast<size_t>(n), "graph arity");
        } catch (const Error& e) {
            o.expect(false, std::string(e.what()) + " on " + join_polys(sys_strings(Z)));
        }
    }
    return o;
}

Outcome crit8()
{
    Outcome o;
    PrimeField F(kBigP);
    for (int it = 0; it < 100; ++it) {
        SplitMix64 r(case_seed(8, it));
        int n = 1 + static_cast<int>(r.below(3));
        int m = 1 + static_cast<int>(r.below(4));
        auto Z = random_admissible(r, F, n, 3, 2);
        auto Z2 = perturb(r, Z, m + 1, 1);
        try {
            auto pr = reduce_pair(Z, Z2, m);
            o.expect(pr.first.ok() && pr.second.ok(), "witnesses in pair run");
            o.expect(pr.first.schedule == pr.second.schedule, "schedules differ");
            o.expect(pr.pairwise_equiv, "outputs not mod-equivalent");
        } catch (const Error& e) {
            o.expect(false, e.what());
        }
    }
    return o;
}

Outcome crit9()
{
    Outcome o;
    for (int it = 0; it < 200; ++it) {
        SplitMix64 r(case_seed(9, it));
        const uint64_t primes[] = {3, 5, 7, 11};
        PrimeField F(primes[it % 4]);
        int m = 1 + static_cast<int>(r.below(4));
        // (a) graph of a symbol with some entries congruent to 1
        int n = 1 + static_cast<int>(r.below(3));
        std::vector<RatFn<PrimeField>> ent;
        for (int i = 0; i < n; ++i) {
            if (r.below(2)) {
                ent.push_back(random_one_unit(r, F, 1 + static_cast<int>(r.below(m + 1)), 2));
            } else {
                RatFn<PrimeField> u;
                do {
                    u = random_unit(r, F, 2);
                } while (F.is_one(u.at0()));
                ent.push_back(u);
            }
        }
        int v = vanishing_order(graph(ent), m);
        for (int rr = 1; rr <= m + 1; ++rr) {
            bool some = false;
            for (const auto& a : ent) some = some || (a - RatFn<PrimeField>::from_int(F, 1)).truncate(rr).is_zero();
            o.expect((v >= rr) == some, "graph vanishing order");
        }
        // (b) traces of relative symbols; the one entry involving x is the relative one
        int rr = 1 + static_cast<int>(r.below(m + 1));
        int d = 1 + static_cast<int>(r.below(3));
        auto g = random_irreducible(r, F, d);
        auto u = random_ext_unit(r, F, d, m);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < rr && j <= m; ++j) u[i][j] = (i == 0 && j == 0) ? 1 : 0;
        std::vector<std::string> sym;
        int nsym = 1 + static_cast<int>(r.below(2));
        int relpos = static_cast<int>(r.below(nsym));
        for (int i = 0; i < nsym; ++i) sym.push_back(i == relpos ? xt_string(F, u) : random_unit(r, F, 2).str());
        try {
            auto tr = trace_relative(F, x_string(F, g), sym, m, rr);
            o.expect(tr.norm.reduction.ok(), "trace witnesses");
            o.expect(tr.relative_ok, "trace output below relative order");
        } catch (const Error& e) {
            o.expect(false, e.what());
        }
        // (c) n = 1: level of the constant term bounds the vanishing order
        try {
            auto pt = symbol_point(F, x_string(F, g), {xt_string(F, u)}, m);
            auto [Z, mult] = triangularize(pt);
            auto a0 = phi_n1(Z);
            int lvl = 0;
            while (lvl < m + 1 && (a0 - RatFn<PrimeField>::from_int(F, 1)).truncate(lvl + 1).is_zero()) ++lvl;
            int vz = vanishing_order(Z, m);
            o.expect(lvl >= vz, "constant term level below vanishing order");
            o.expect(vz >= rr, "pushed-forward relative point lost order");
        } catch (const Error& e) {
            o.expect(false, e.what());
        }
    }
    return o;
}

Outcome crit10()
{
    Outcome o;
    PrimeField F(kBigP);
    for (int it = 0; it < 100; ++it) {
        SplitMix64 r(case_seed(10, it));
        int m = 1 + static_cast<int>(r.below(3));
        int d = 1 + static_cast<int>(r.below(3));
        auto g = random_irreducible(r, F, d);
        std::string gs = x_string(F, g);
        int n = 1 + (it % 2);
        std::vector<std::vector<std::vector<PrimeField::Elem>>> us;
        for (int i = 0; i < n; ++i) us.push_back(random_ext_unit(r, F, d, m));
        std::vector<std::string> ent, ent0;
        for (const auto& u : us) {
            ent.push_back(xt_string(F, u));
            auto u0 = u;
            for (auto& row : u0) row.resize(1);
            ent0.push_back(xt_string(F, u0));
        }
        try {
            auto lhs_full = norm(F, gs, ent, m);
            auto rhs_full = field_norm(F, gs, ent0);
            o.expect(lhs_full.reduction.ok() && rhs_full.reduction.ok(), "witnesses");
            if (n == 1) {
                auto a = fold_n1(F, lhs_full.symbols(), m + 1);
                auto b = fold_n1(F, rhs_full.symbols(), 1);
                o.expect(F.eq(a.c[0], b.c[0]), "n=1 specialization");
            } else {
                CycleSum<PrimeField> lhs(1);
                for (const auto& [k, v] : lhs_full.symbols().terms) lhs.add(specialize(graph_system(F, v.first)), v.second);
                CycleSum<PrimeField> rhs = rhs_full.symbols().to_cycles(1);
                o.expect(lhs == rhs, "n=2 specialization: " + lhs.str() + " vs " + rhs.str());
            }
        } catch (const Error& e) {
            o.expect(false, e.what());
        }
    }
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    struct Crit {
        int id;
        const char* what;
        double limit;
        std::function<Outcome()> run;
    };
    std::vector<Crit> crits = {
        {1, "Witt ring axioms, p in {2,3,5,7}, 200 triples each", 5, crit1},
        {2, "ghost homomorphism over Q and F_11, 100 pairs each", 5, crit2},
        {3, "factorization round trip, 500 vectors", 2, crit3},
        {4, "witness identities, 200 draws per family", 10, crit4},
        {5, "n=1 norm equals determinant oracle, 200 draws", 20, crit5},
        {6, "norm transitivity F_p < F_p^2 < F_p^4, 100 units", 10, crit6},
        {7, "reduction soundness, 200 cycles (n<=3, d_i<=3)", 30, crit7},
        {8, "mod-equivalence preservation, 100 pairs", 20, crit8},
        {9, "relative and vanishing structure, 200 draws", 10, crit9},
        {10, "specialization compatibility, 100 draws", 15, crit10},
    };
    int failed = 0;
    for (const auto& c : crits) {
        if (only && c.id != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("uncaught: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = o.ok && secs < c.limit;
        if (o.ok && !pass) o.note = "time limit exceeded";
        if (!pass) ++failed;
        std::printf("criterion %2d: %s  %.2fs (limit %.0fs)  %s%s%s\n", c.id, pass ? "PASS" : "FAIL", secs, c.limit, c.what, o.note.empty() ? "" : "  -- ", o.note.c_str());
        std::fflush(stdout);
    }
    if (!only) std::printf("%d/%zu criteria passed\n", static_cast<int>(crits.size()) - failed, crits.size());
    return failed ? 1 : 0;
}
