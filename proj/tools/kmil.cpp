// kmil: command line front end for the kmilnor library.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "io.hpp"
#include "suites.hpp"

using namespace kmil;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;

struct Options {
    std::string field;
    std::optional<int> m;
    std::optional<std::string> ext;
    std::string symbol, cycle, witness, suite, out;
    std::string x, y;
    std::string witt_op;
    uint64_t seed = 1;
    std::optional<long> iters;
};

int need_m(const Options& o)
{
    if (!o.m) fail(Errc::InvalidInput, "--m is required");
    if (*o.m < 0) fail(Errc::InvalidInput, "--m must be nonnegative");
    return *o.m;
}

FieldCtx need_field(const std::string& tag)
{
    if (tag.empty()) fail(Errc::InvalidInput, "--field is required (Fp:<p> or Q)");
    return parse_field(tag);
}

template <class K>
std::string elems_str(const K& k, const std::vector<typename K::Elem>& v)
{
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + k.str(v[i]);
    return s + "]";
}

void emit(const Options& o, const json& j)
{
    if (!o.out.empty()) io::write_json_file(o.out, j);
}

int cmd_witt(const Options& o)
{
    int m = need_m(o);
    if (m < 1) fail(Errc::InvalidInput, "witt needs --m >= 1");
    if (o.x.empty()) fail(Errc::InvalidInput, "--x is required");
    return with_field(need_field(o.field), [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        WittVector<K> x(parse_series(k, m + 1, o.x));
        auto second = [&]() {
            if (o.y.empty()) fail(Errc::InvalidInput, "--y is required for " + o.witt_op);
            return WittVector<K>(parse_series(k, m + 1, o.y));
        };
        std::string res;
        if (o.witt_op == "add")
            res = witt_add(x, second()).str();
        else if (o.witt_op == "star")
            res = witt_star(x, second()).str();
        else if (o.witt_op == "ghost")
            res = elems_str(k, ghost(x));
        else if (o.witt_op == "factor")
            res = elems_str(k, witt_factor(x));
        else if (o.witt_op == "level")
            res = std::to_string(vanishing_level(x));
        else
            fail(Errc::InvalidInput, "unknown witt operation " + o.witt_op);
        std::cout << res << "\n";
        emit(o, {{"field", k.tag()}, {"m", m}, {"op", o.witt_op}, {"x", o.x}, {"y", o.y}, {"result", res}});
        return kExitOk;
    });
}

template <class K>
int report_reduction(const ReductionResult<K>& res, const SymbolSum<K>& out)
{
    std::cout << out.str() << "\n";
    std::cout << "witnesses: " << res.witnesses.size() << (res.ok() ? ", all verified" : ", VERIFICATION FAILED") << "\n";
    if (!res.ok()) std::cerr << res.diagnostics;
    return res.ok() ? kExitOk : kExitVerify;
}

int cmd_norm(const Options& o)
{
    json in = json::object();
    std::vector<std::string> entries;
    if (io::names_file(o.symbol)) {
        in = io::read_json_file(o.symbol);
        entries = io::field_or<std::vector<std::string>>(in, "entries", {});
    } else if (!o.symbol.empty()) {
        entries = split_symbol(o.symbol);
    }
    if (entries.empty()) fail(Errc::InvalidInput, "--symbol needs at least one entry");
    std::string tag = o.field.empty() ? io::field_or<std::string>(in, "field", "") : o.field;
    std::string ext = o.ext ? *o.ext : io::field_or<std::string>(in, "ext", "");
    Options oo = o;
    if (!oo.m && in.contains("m")) oo.m = io::field_or<int>(in, "m", 0);
    int m = need_m(oo);
    return with_field(need_field(tag), [&](const auto& k) {
        auto nr = norm(k, ext, entries, m);
        auto syms = nr.symbols();
        json rec = {{"field", k.tag()}, {"ext", ext}, {"m", m}, {"n", entries.size()}, {"entries", entries}, {"cycle", sys_strings(nr.cycle)}, {"cycle_mult", nr.mult}, {"outputs", io::symbol_outputs(syms)}, {"witnesses", io::witness_log(nr.reduction)}};
        emit(o, rec);
        return report_reduction(nr.reduction, syms);
    });
}

int cmd_reduce(const Options& o)
{
    json in = json::object();
    std::vector<std::string> polys;
    if (io::names_file(o.cycle)) {
        in = io::read_json_file(o.cycle);
        polys = io::field_or<std::vector<std::string>>(in, "polys", {});
    } else {
        polys = io::split_polys(o.cycle);
    }
    if (polys.empty()) fail(Errc::InvalidInput, "--cycle needs at least one polynomial");
    std::string tag = o.field.empty() ? io::field_or<std::string>(in, "field", "") : o.field;
    Options oo = o;
    if (!oo.m && in.contains("m")) oo.m = io::field_or<int>(in, "m", 0);
    int m = need_m(oo);
    return with_field(need_field(tag), [&](const auto& k) {
        auto Z = parse_system(k, polys);
        auto res = reduce_to_graphs(Z, m);
        auto syms = res.symbols();
        json rec = {{"field", k.tag()}, {"m", m}, {"n", Z.n()}, {"polys", sys_strings(Z)}, {"terms", io::graph_terms(res)}, {"outputs", io::symbol_outputs(syms)}, {"witnesses", io::witness_log(res)}};
        emit(o, rec);
        return report_reduction(res, syms);
    });
}

int cmd_verify(const Options& o)
{
    if (o.witness.empty()) fail(Errc::InvalidInput, "--witness is required");
    json in = io::read_json_file(o.witness);
    json records = json::array();
    if (in.is_array())
        records = in;
    else if (in.contains("witnesses"))
        records = in["witnesses"];
    else
        records.push_back(in);
    std::string tag = o.field.empty() ? io::field_or<std::string>(in.is_object() ? in : json::object(), "field", "") : o.field;
    return with_field(need_field(tag), [&](const auto& k) {
        int bad = 0;
        for (size_t i = 0; i < records.size(); ++i) {
            const json& r = records[i];
            if (!r.is_object() || !r.contains("kind") || !r.contains("params")) fail(Errc::InvalidInput, "witness record " + std::to_string(i) + " needs kind and params");
            std::map<std::string, std::string> params;
            for (const auto& [key, v] : r["params"].items()) {
                if (!v.is_string()) fail(Errc::InvalidInput, "witness parameter " + key + " must be a string");
                params[key] = v.template get<std::string>();
            }
            auto W = rebuild_witness(k, parse_witness_kind(io::field_or<std::string>(r, "kind", "")), params);
            auto rep = verify(W);
            std::string claimed = io::field_or<std::string>(r, "claimed", W.claimed().str());
            bool ok = rep.ok && claimed == W.claimed().str();
            std::string why = !rep.ok ? rep.diff : (ok ? "" : "recorded claim " + claimed + " is not the boundary " + W.claimed().str());
            std::cout << "witness " << i << " (" << witness_kind_name(W.kind) << "): " << (ok ? "verified" : "FAILED: " + why) << "\n";
            if (!ok) ++bad;
        }
        std::cout << records.size() - bad << "/" << records.size() << " verified\n";
        return bad ? kExitVerify : kExitOk;
    });
}

int cmd_check(const Options& o)
{
    if (!o.iters) fail(Errc::InvalidInput, "--iters is required");
    if (*o.iters <= 0) fail(Errc::InvalidInput, "--iters must be positive");
    int m = o.m ? need_m(o) : 4;
    if (m < 1 || m > 16) fail(Errc::InvalidInput, "check needs 1 <= m <= 16");
    std::string tag = o.field.empty() ? "Fp:7" : o.field;
    return with_field(need_field(tag), [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        auto fn = suites::suite_fn<K>(o.suite);
        auto rep = suites::run_suite<K>(o.suite, k, m, o.seed, *o.iters, fn);
        std::cout << "suite " << o.suite << " over " << k.tag() << ", m = " << m << ", seed = " << o.seed << ": " << *o.iters << " cases, " << rep.passed << " passed, " << rep.skipped << " skipped, " << rep.failed << " failed\n";
        json rec = {{"suite", o.suite}, {"field", k.tag()}, {"m", m}, {"seed", o.seed}, {"iters", *o.iters}, {"passed", rep.passed}, {"skipped", rep.skipped}, {"failed", rep.failed}, {"reproducer", rep.reproducer}};
        emit(o, rec);
        if (rep.failed) {
            std::cout << "FAIL\n";
            std::cerr << "reproducer: " << rep.reproducer.dump(2) << "\n";
            return kExitVerify;
        }
        std::cout << "PASS\n";
        return kExitOk;
    });
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Milnor K-theory of k[t]/(t^{m+1}): Witt vectors, cycles, witnesses, norms"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--field", o.field, "Fp:<p> or Q");
        sub->add_option("--m", o.m, "truncation: work modulo t^{m+1}");
        sub->add_option("--out", o.out, "write a JSON record here");
    };

    auto* witt = app.add_subcommand("witt", "Witt vector arithmetic");
    witt->add_option("op", o.witt_op, "add | star | ghost | factor | level")->required()->check(CLI::IsMember({"add", "star", "ghost", "factor", "level"}));
    witt->add_option("--x", o.x, "series in t with constant term 1");
    witt->add_option("--y", o.y, "second series for add and star");
    common(witt);

    auto* nrm = app.add_subcommand("norm", "norm of a symbol along k[x]/(g)");
    nrm->add_option("--ext", o.ext, "defining polynomial g(x); empty for the trivial extension");
    nrm->add_option("--symbol", o.symbol, "\"{u1, ..., un}\" or a symbol JSON file")->required();
    common(nrm);

    auto* red = app.add_subcommand("reduce", "reduce a triangular cycle to graph cycles");
    red->add_option("--cycle", o.cycle, "\"P1 ; P2 ; ...\" or a cycle JSON file")->required();
    common(red);

    auto* ver = app.add_subcommand("verify", "re-verify a witness log");
    ver->add_option("--witness", o.witness, "witness record or result JSON file")->required();
    ver->add_option("--field", o.field, "field tag when the file has none");

    auto* chk = app.add_subcommand("check", "run a seeded property suite");
    chk->add_option("--suite", o.suite, "witt | cycles | witness | norms")->required();
    chk->add_option("--seed", o.seed, "master seed");
    chk->add_option("--iters", o.iters, "number of cases");
    common(chk);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (witt->parsed()) return cmd_witt(o);
        if (nrm->parsed()) return cmd_norm(o);
        if (red->parsed()) return cmd_reduce(o);
        if (ver->parsed()) return cmd_verify(o);
        if (chk->parsed()) return cmd_check(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
