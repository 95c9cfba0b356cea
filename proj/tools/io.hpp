#ifndef KMIL_TOOLS_IO_HPP
#define KMIL_TOOLS_IO_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kmilnor/kgroups.hpp"

namespace kmil::io {

using json = nlohmann::ordered_json;

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) fail(Errc::InvalidInput, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(Errc::ParseError, path + ": " + e.what());
    }
}

inline void write_json_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out) fail(Errc::InvalidInput, "cannot write " + path);
    out << j.dump(2) << "\n";
}

// A flag value naming an existing file is read as JSON; anything else is inline text.
inline bool names_file(const std::string& s)
{
    std::error_code ec;
    return !s.empty() && s.find('{') == std::string::npos && std::filesystem::is_regular_file(s, ec);
}

template <class T>
T field_or(const json& j, const char* key, const T& dflt)
{
    if (!j.contains(key)) return dflt;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        fail(Errc::InvalidInput, std::string("field \"") + key + "\" has the wrong type");
    }
}

template <class K>
json witness_record(long coef, const Witness<K>& W, bool verified)
{
    json params = json::object();
    for (const auto& [k, v] : W.params) params[k] = v;
    return {{"kind", witness_kind_name(W.kind)}, {"params", params}, {"coef", coef}, {"claimed", W.claimed().str()}, {"verified", verified}};
}

template <class K>
json witness_log(const ReductionResult<K>& res)
{
    json arr = json::array();
    for (size_t i = 0; i < res.witnesses.size(); ++i) arr.push_back(witness_record(res.witnesses[i].first, res.witnesses[i].second, bool(res.verified[i])));
    return arr;
}

template <class K>
json symbol_outputs(const SymbolSum<K>& s)
{
    json arr = json::array();
    for (const auto& [key, v] : s.terms) {
        json ent = json::array();
        for (const auto& a : v.first) ent.push_back(a.str());
        arr.push_back({{"mult", v.second}, {"entries", ent}});
    }
    return arr;
}

template <class K>
json graph_terms(const ReductionResult<K>& res)
{
    CycleSum<K> cs(res.m + 1);
    for (const auto& [c, e] : res.graphs) cs.add(graph_system(res.input.proto.field(), e), c);
    json arr = json::array();
    for (const auto& [key, mult] : cs.terms) arr.push_back({{"mult", mult}, {"polys", sys_strings(cs.reps.at(key))}});
    return arr;
}

inline std::vector<std::string> split_polys(const std::string& joined)
{
    std::vector<std::string> out;
    std::stringstream ss(joined);
    std::string part;
    while (std::getline(ss, part, ';'))
        if (part.find_first_not_of(" \t") != std::string::npos) out.push_back(part);
    return out;
}

} // namespace kmil::io

#endif
