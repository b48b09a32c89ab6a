#pragma once

/**
 * @file io.hpp
 * @brief JSON reading and writing for posets, graphs and polynomials.
 *
 * Poset files look like
 *   {"elements": ["0", "a", "b", "1"],
 *    "covers":   [["0","a"], ["0","b"], ["a","1"], ["b","1"]],
 *    "labels":   {"0|a": 1, "0|b": 2, "a|1": 2, "b|1": 1}}
 * with "labels" optional and possibly partial. Graph files are
 * {"vertices": n, "edges": [[u, v], ...]} with 1-indexed vertices.
 * Integer coefficients are written as decimal strings.
 */

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chowpoly/abpoly.hpp"
#include "chowpoly/build.hpp"
#include "chowpoly/error.hpp"
#include "chowpoly/poly.hpp"
#include "chowpoly/poset.hpp"
#include "chowpoly/rlabel.hpp"

namespace chowpoly {

using Json = nlohmann::json;

struct LoadedPoset {
    GradedPoset poset;
    std::optional<EdgeLabeling> labeling;  // present iff the file has a "labels" key
};

// ---------------------------------------------------------------------------
// Polynomials

inline Json to_json(const IntPolynomial& p)
{
    Json cs = Json::array();
    for (const auto& c : p.coeffs()) cs.push_back(c.str());
    return Json{{"coeffs", cs}};
}

inline BigInt bigint_from_json(const Json& j)
{
    try {
        if (j.is_number_integer()) return BigInt(j.get<long long>());
        if (j.is_string()) {
            const auto s = j.get<std::string>();
            const std::size_t start = !s.empty() && s[0] == '-';
            if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
                throw InputError("not a decimal integer: '" + s + "'");
            return BigInt(s);
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(e.what());
    }
    throw InputError("expected an integer or decimal string, got " + j.dump());
}

inline IntPolynomial polynomial_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw InputError("polynomial JSON must be {\"coeffs\": [...]}");
    std::vector<BigInt> cs;
    for (const auto& c : j["coeffs"]) cs.push_back(bigint_from_json(c));
    return IntPolynomial(std::move(cs));
}

inline Json to_json(const ABPolynomial& p)
{
    Json terms = Json::array();
    for (const auto& [w, c] : p.terms()) terms.push_back(Json{{"word", w.str()}, {"coeff", to_json(c)}});
    return terms;
}

inline ABPolynomial ab_polynomial_from_json(const Json& j)
{
    if (!j.is_array()) throw InputError("ab-polynomial JSON must be an array of terms");
    ABPolynomial out;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("word") || !t["word"].is_string() || !t.contains("coeff"))
            throw InputError("ab-polynomial term must be {\"word\": ..., \"coeff\": ...}");
        out.add_term(ABWord(t["word"].get<std::string>()), polynomial_from_json(t["coeff"]));
    }
    return out;
}

inline Json to_json(const GammaVector& g)
{
    Json gs = Json::array();
    for (const auto& c : g.gammas) gs.push_back(c.str());
    return Json{{"center_degree", g.center_degree}, {"gammas", gs}};
}

// ---------------------------------------------------------------------------
// Posets

inline std::string label_key(const std::string& lo, const std::string& hi) { return lo + "|" + hi; }

inline LoadedPoset poset_from_json(const Json& j)
{
    if (!j.is_object()) throw InputError("poset JSON must be an object");
    for (const auto& [key, _] : j.items())
        if (key != "elements" && key != "covers" && key != "labels")
            throw InputError("unexpected key '" + key + "' in poset JSON");
    if (!j.contains("elements") || !j["elements"].is_array()) throw InputError("poset JSON needs an \"elements\" array");
    if (!j.contains("covers") || !j["covers"].is_array()) throw InputError("poset JSON needs a \"covers\" array");

    std::vector<std::string> names;
    std::map<std::string, Element> index;
    for (const auto& e : j["elements"]) {
        if (!e.is_string()) throw InputError("element ids must be strings, got " + e.dump());
        auto id = e.get<std::string>();
        if (id.empty() || id.find('|') != std::string::npos)
            throw InputError("element id '" + id + "' must be nonempty and must not contain '|'");
        if (!index.emplace(id, static_cast<Element>(names.size())).second)
            throw InputError("duplicate element id '" + id + "'");
        names.push_back(std::move(id));
    }
    auto lookup = [&](const Json& v) {
        if (!v.is_string()) throw InputError("cover endpoints must be element ids, got " + v.dump());
        auto it = index.find(v.get<std::string>());
        if (it == index.end()) throw InputError("cover references unknown element '" + v.get<std::string>() + "'");
        return it->second;
    };
    std::vector<Cover> covers;
    for (const auto& c : j["covers"]) {
        if (!c.is_array() || c.size() != 2) throw InputError("each cover must be a pair [lo, hi], got " + c.dump());
        covers.push_back({lookup(c[0]), lookup(c[1])});
    }

    LoadedPoset out{GradedPoset::from_covers(names.size(), covers, names), std::nullopt};
    if (j.contains("labels")) {
        const Json& labels = j["labels"];
        if (!labels.is_object()) throw InputError("\"labels\" must be an object keyed by \"lo|hi\"");
        EdgeLabeling lambda(out.poset);
        for (const auto& [key, value] : labels.items()) {
            const auto bar = key.find('|');
            if (bar == std::string::npos || key.find('|', bar + 1) != std::string::npos)
                throw InputError("label key '" + key + "' must have the form \"lo|hi\"");
            const Element lo = out.poset.index_of(key.substr(0, bar));
            const Element hi = out.poset.index_of(key.substr(bar + 1));
            if (!value.is_number_integer() || value.get<long long>() < 1 ||
                value.get<long long>() > static_cast<long long>(UINT32_MAX))
                throw InputError("label for '" + key + "' must be a positive integer, got " + value.dump());
            lambda.set(out.poset, lo, hi, static_cast<Label>(value.get<long long>()));
        }
        out.labeling = std::move(lambda);
    }
    return out;
}

/// Canonical form: elements in index order, covers sorted by index, labels
/// keyed "lo|hi" in sorted key order. Unlabeled covers are omitted.
inline Json poset_to_json(const GradedPoset& P, const EdgeLabeling* lambda = nullptr)
{
    Json j;
    j["elements"] = P.names();
    Json covers = Json::array();
    for (const Cover& c : P.covers()) covers.push_back(Json::array({P.name(c.lower), P.name(c.upper)}));
    j["covers"] = std::move(covers);
    if (lambda) {
        Json labels = Json::object();
        for (const Cover& c : P.covers())
            if (auto v = lambda->find(P, c.lower, c.upper)) labels[label_key(P.name(c.lower), P.name(c.upper))] = *v;
        j["labels"] = std::move(labels);
    }
    return j;
}

inline std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

inline Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline LoadedPoset load_poset(const std::string& path) { return poset_from_json(read_json_file(path)); }

inline void save_poset(const std::string& path, const GradedPoset& P, const EdgeLabeling* lambda = nullptr)
{
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << dump_canonical(poset_to_json(P, lambda));
}

// ---------------------------------------------------------------------------
// Graphs

inline GraphInput graph_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_number_integer() || !j.contains("edges") ||
        !j["edges"].is_array())
        throw InputError("graph JSON must be {\"vertices\": n, \"edges\": [[u, v], ...]}");
    const long long n = j["vertices"].get<long long>();
    if (n < 1) throw InputError("graph must have at least one vertex");
    GraphInput g{static_cast<std::size_t>(n), {}};
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw InputError("each edge must be a pair of vertex numbers, got " + e.dump());
        g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

inline Json to_json(const GraphInput& g)
{
    Json edges = Json::array();
    for (auto [u, v] : g.edges) edges.push_back(Json::array({u, v}));
    return Json{{"vertices", g.vertices}, {"edges", edges}};
}

inline GraphInput load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

}  // namespace chowpoly
