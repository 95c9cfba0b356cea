#include "doctest.h"

#include "kmilnor/kgroups.hpp"
#include "oracles.hpp"

using namespace kmil;

namespace {

template <class K>
TruncSeries<K> leibniz_norm(const K& k, const std::vector<long>& g, const std::vector<std::vector<long>>& u, int N)
{
    // g monic coefficients low to high; u[i] is the t-expansion of the coefficient of x^i
    std::vector<typename K::Elem> gm;
    for (long c : g) gm.push_back(k.from_int(c));
    std::vector<TruncSeries<K>> us;
    for (const auto& ui : u) {
        TruncSeries<K> s(k, N);
        for (int j = 0; j < N && j < static_cast<int>(ui.size()); ++j) s.c[j] = k.from_int(ui[j]);
        us.push_back(s);
    }
    return oracle::leibniz_det(oracle::mult_matrix<K>(us, gm), TruncSeries<K>(k, N));
}

} // namespace

TEST_CASE("graph and phi_n1")
{
    RationalField Q;
    auto G = graph(std::vector<RatFn<RationalField>>{parse_local(Q, "2+t")});
    CHECK(sys_strings(G) == std::vector<std::string>{"y1+(-2-t)"});
    auto G2 = graph(std::vector<RatFn<RationalField>>{parse_local(Q, "1+t"), parse_local(Q, "3")});
    CHECK(vanishing_order(G2, 3) >= 1);
    try {
        graph(std::vector<RatFn<RationalField>>{parse_local(Q, "t"), parse_local(Q, "3")});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonUnitEntry);
    }
    CHECK(phi_n1(G) == parse_local(Q, "2+t"));
    CHECK(phi_n1(parse_system(Q, {"y1^2-(3+t)*y1+(1+t)"})) == parse_local(Q, "1+t"));
}

TEST_CASE("reduce_to_graphs examples")
{
    RationalField Q;
    auto Z = parse_system(Q, {"y1^2-(3+t)*y1+(1+t)"});
    auto res = reduce_to_graphs(Z, 3);
    CHECK(res.ok());
    CHECK(res.witnesses.size() == 1);
    CHECK(res.symbols().str() == "{1+t}");
    auto G = graph(std::vector<RatFn<RationalField>>{parse_local(Q, "2+t"), parse_local(Q, "5")});
    auto rg = reduce_to_graphs(G, 2);
    CHECK(rg.witnesses.empty());
    CHECK(rg.graphs.size() == 1);
    CHECK(graph_system(Q, rg.graphs[0].second) == G);

    PrimeField F5(5);
    auto pt = base_change_point(F5, "x^2-2", {"x*(1+t)", "2"}, 0);
    auto [T, mult] = triangularize(pt);
    auto r5 = reduce_to_graphs(T, 2, mult);
    CHECK(r5.ok());
    CHECK(r5.symbols(0).str() == "{3+t+3*t^2, 2}");
}

TEST_CASE("norms")
{
    PrimeField F5(5), F3(3);
    auto n = norm(F5, "x^2-2", {"x*(1+t)"}, 2);
    CHECK(n.reduction.ok());
    CHECK(n.symbols().str() == "{3+t+3*t^2}");
    CHECK(norm_n1_oracle(F5, "x^2-2", "x*(1+t)", 2).str() == "3+t+3*t^2");
    CHECK(leibniz_norm(F5, {-2, 0, 1}, {{0}, {1, 1}}, 3).str() == "3+t+3*t^2");
    auto n2 = norm(F5, "x^2-2", {"x*(1+t)", "2"}, 2);
    CHECK(n2.symbols().str() == "{3+t+3*t^2, 2}");
    CHECK(norm(F5, "x-1", {"2+t", "3"}, 2).symbols().str() == "{2+t, 3}");
    CHECK(norm_n1_oracle(F3, "x^2+1", "x", 2).str() == "1");
    CHECK(norm_n1_oracle(F5, "x^3+x+1", "2+t", 2) == parse_series(F5, 3, "(2+t)^3"));
    auto fn = field_norm(F3, "x^2+1", {"x"});
    CHECK(fn.symbols().str() == "0");
    CHECK(fold_n1(F3, fn.symbols(), 1).str() == "1");
    CHECK(field_norm(F5, "x-1", {"3"}).symbols().str() == "{3}");
}

TEST_CASE("trace_relative")
{
    PrimeField F5(5);
    auto tr = trace_relative(F5, "x^2-2", {"1+t*x"}, 3, 1);
    CHECK(tr.relative_ok);
    CHECK(fold_n1(F5, tr.norm.symbols(), 4).str() == "1+3*t^2");
    CHECK(leibniz_norm(F5, {-2, 0, 1}, {{1}, {0, 1}}, 4).str() == "1+3*t^2");
    for (const auto& [k, v] : tr.norm.symbols().terms) CHECK(vanishing_order(graph_system(F5, v.first), 3) >= 2);
    try {
        trace_relative(F5, "x-1", {"2+t"}, 3, 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotRelative);
    }
    CHECK(trace_relative(F5, "x-1", {"1+t^2"}, 3, 2).norm.symbols().str() == "{1+t^2}");
}

TEST_CASE("n = 1 pipeline agrees with Leibniz determinant")
{
    oracle::Rng rng(99);
    for (uint64_t p : {2, 3, 5, 7}) {
        PrimeField F(p);
        std::vector<std::pair<std::string, std::vector<long>>> exts;
        if (p == 2) exts = {{"x^2+x+1", {1, 1, 1}}, {"x^3+x+1", {1, 1, 0, 1}}};
        if (p == 3) exts = {{"x^2+1", {1, 0, 1}}, {"x^3-x+1", {1, -1, 0, 1}}};
        if (p == 5) exts = {{"x^2-2", {-2, 0, 1}}, {"x^3+x+1", {1, 1, 0, 1}}};
        if (p == 7) exts = {{"x^2+1", {1, 0, 1}}, {"x^3-2", {-2, 0, 0, 1}}};
        for (const auto& [g, gc] : exts) {
            for (int it = 0; it < 4; ++it) {
                int m = static_cast<int>(oracle::uniform(rng, 1, 4));
                int d = static_cast<int>(gc.size()) - 1;
                std::vector<std::vector<long>> u(d, std::vector<long>(m + 1));
                std::string us;
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j <= m; ++j) {
                        u[i][j] = oracle::uniform(rng, 0, static_cast<long>(p) - 1);
                        us += "+" + std::to_string(u[i][j]) + "*x^" + std::to_string(i) + "*t^" + std::to_string(j);
                    }
                NormResult<PrimeField> nr;
                try {
                    nr = norm(F, g, {us}, m);
                } catch (const Error& e) {
                    // non-units are rejected up front
                    CHECK((e.code() == Errc::NonUnitCoordinate));
                    continue;
                }
                CHECK(nr.reduction.ok());
                CHECK(fold_n1(F, nr.symbols(), m + 1) == leibniz_norm(F, gc, u, m + 1));
            }
        }
    }
}
