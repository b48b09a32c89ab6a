// chow: command-line driver for Chow polynomials, extended ab-indices and
// identity checks on graded posets.
//
// Exit codes: 0 success, 1 input error, 2 disagreement or failed verification.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chowpoly/chowpoly.hpp"

using namespace chowpoly;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDisagree = 2;

struct SourceOptions {
    std::string poset_file;
    std::string graph_file;
    std::string uniform;
    std::optional<std::size_t> braid;
    std::optional<std::size_t> boolean;
};

struct Source {
    std::string descriptor;
    GradedPoset poset;
    std::optional<EdgeLabeling> labeling;
    std::optional<std::size_t> braid_n;
};

void add_source_options(CLI::App* app, SourceOptions& s)
{
    app->add_option("--poset", s.poset_file, "poset JSON file");
    app->add_option("--braid", s.braid, "partition lattice Pi_N");
    app->add_option("--boolean", s.boolean, "Boolean lattice of rank N");
    app->add_option("--uniform", s.uniform, "flats of the uniform matroid U_{K,M}, given as K,M");
    app->add_option("--graph", s.graph_file, "bond lattice of a graph JSON file");
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

std::size_t parse_size(const std::string& text, const std::string& what)
{
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != text.size() || text.find('-') != std::string::npos)
        throw InputError(what + ": expected a nonnegative integer, got '" + text + "'");
    return v;
}

Source resolve(const SourceOptions& s)
{
    const int given = !s.poset_file.empty() + !s.graph_file.empty() + !s.uniform.empty() + s.braid.has_value() +
                      s.boolean.has_value();
    if (given != 1)
        throw InputError("exactly one source is required: --poset FILE | --braid N | --boolean N | --uniform K,M | "
                         "--graph FILE");
    if (!s.poset_file.empty()) {
        auto loaded = load_poset(s.poset_file);
        return {"poset:" + s.poset_file, std::move(loaded.poset), std::move(loaded.labeling), std::nullopt};
    }
    if (!s.graph_file.empty()) {
        auto L = bond_lattice(load_graph(s.graph_file));
        return {"graph:" + s.graph_file, std::move(L.poset), std::move(L.labeling), std::nullopt};
    }
    if (!s.uniform.empty()) {
        const auto parts = split(s.uniform, ',');
        if (parts.size() != 2) throw InputError("--uniform expects K,M, got '" + s.uniform + "'");
        const std::size_t k = parse_size(parts[0], "--uniform K"), m = parse_size(parts[1], "--uniform M");
        auto L = uniform_matroid_flats(k, m);
        return {"uniform:" + std::to_string(k) + "," + std::to_string(m), std::move(L.poset), std::move(L.labeling),
                std::nullopt};
    }
    if (s.braid) {
        auto L = partition_lattice(*s.braid);
        return {"braid:" + std::to_string(*s.braid), std::move(L.poset), std::move(L.labeling), s.braid};
    }
    auto L = boolean_lattice(*s.boolean);
    return {"boolean:" + std::to_string(*s.boolean), std::move(L.poset), std::move(L.labeling), std::nullopt};
}

std::vector<IntPolynomial> parse_tuple(const std::string& text, std::size_t arity, const std::string& flag)
{
    const auto parts = split(text, ',');
    if (parts.size() != arity)
        throw InputError(flag + " expects " + std::to_string(arity) + " comma-separated polynomials in x, got '" +
                         text + "'");
    std::vector<IntPolynomial> out;
    for (const auto& p : parts) out.push_back(parse_polynomial(p));
    return out;
}

std::string ascending(const IntPolynomial& p) { return to_string(p, "x", TermOrder::Ascending); }

std::string gamma_text(const GammaVector& g)
{
    std::string s = "(";
    for (std::size_t i = 0; i < g.gammas.size(); ++i) s += (i ? ", " : "") + g.gammas[i].str();
    return s + ")";
}

Json poly_json(const IntPolynomial& p, TermOrder order = TermOrder::Descending)
{
    Json j = to_json(p);
    j["text"] = to_string(p, "x", order);
    return j;
}

// Center of symmetry: n - 1 for the Chow polynomial, n for the augmented one.
std::size_t chow_center(std::size_t rank, bool augmented)
{
    if (augmented) return rank;
    return rank == 0 ? 0 : rank - 1;
}

struct Report {
    Json j;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Report(const std::string& command, const std::string& input)
    {
        j["command"] = command;
        j["input"] = input;
        j["result"] = nullptr;
        j["gamma"] = nullptr;
        j["method"] = nullptr;
        j["cross_check"] = Json{{"status", "not-requested"}};
    }

    std::string dump()
    {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        j["wall_time_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
        return j.dump(2);
    }
};

// ---------------------------------------------------------------------------
// chow

struct ChowOptions {
    SourceOptions source;
    bool augmented = false;
    std::string method = "chains";
    bool gamma = false;
    bool json = false;
};

int cmd_chow(const ChowOptions& o, const std::string& command)
{
    const Source src = resolve(o.source);
    const GradedPoset& P = src.poset;
    Report report(command, src.descriptor);

    using Compute = std::function<IntPolynomial()>;
    std::vector<std::pair<std::string, Compute>> methods;
    auto need_labels = [&]() -> const EdgeLabeling& {
        if (!src.labeling) throw InputError("method 'descents' needs an edge labeling, and the input has none");
        return *src.labeling;
    };
    const Compute chains = [&] { return o.augmented ? augmented_chow_by_chains(P) : chow_by_chains(P); };
    const Compute descents = [&] {
        return o.augmented ? augmented_chow_by_descents(P, need_labels()) : chow_by_descents(P, need_labels());
    };
    const Compute extab = [&] { return o.augmented ? augmented_chow_by_extab(P) : chow_by_extab(P); };

    std::vector<std::string> skipped;
    if (o.method == "chains") {
        methods.emplace_back("chains", chains);
    } else if (o.method == "descents") {
        methods.emplace_back("descents", descents);
    } else if (o.method == "extab") {
        methods.emplace_back("extab", extab);
    } else {
        methods.emplace_back("chains", chains);
        if (src.labeling && src.labeling->is_complete())
            methods.emplace_back("descents", descents);
        else
            skipped.push_back("descents (no complete labeling)");
        methods.emplace_back("extab", extab);
        if (src.braid_n) {
            const std::size_t n = *src.braid_n;
            methods.emplace_back("braid", [n, &o] { return o.augmented ? augmented_chow_braid(n) : chow_braid(n); });
        }
    }

    std::vector<std::pair<std::string, IntPolynomial>> values;
    for (const auto& [name, f] : methods) values.emplace_back(name, f());
    bool agree = true;
    for (const auto& v : values) agree = agree && v.second == values.front().second;

    const IntPolynomial& h = values.front().second;
    std::optional<GammaVector> gamma;
    if (o.gamma && agree) gamma = gamma_vector(h, chow_center(P.rank(), o.augmented));

    report.j["method"] = o.method;
    report.j["augmented"] = o.augmented;
    Json result = poly_json(h);
    if (methods.size() > 1) {
        Json per = Json::object();
        for (const auto& [name, p] : values) per[name] = poly_json(p);
        result["by_method"] = per;
        Json cc{{"status", agree ? "pass" : "fail"}};
        if (!agree) cc["detail"] = "methods disagree";
        if (!skipped.empty()) cc["skipped"] = skipped;
        report.j["cross_check"] = cc;
    }
    report.j["result"] = result;
    if (gamma) report.j["gamma"] = to_json(*gamma);

    if (o.json) {
        std::cout << report.dump() << "\n";
    } else if (!agree) {
        std::cout << "cross-check: fail\n";
        for (const auto& [name, p] : values) std::cout << name << ": " << to_string(p) << "\n";
    } else {
        std::cout << to_string(h) << "\n";
        if (gamma) std::cout << "gamma: " << gamma_text(*gamma) << "\n";
        if (methods.size() > 1) {
            std::cout << "cross-check: pass (";
            for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? ", " : "") << values[i].first;
            std::cout << ")\n";
        }
    }
    return agree ? kExitOk : kExitDisagree;
}

// ---------------------------------------------------------------------------
// abindex

struct ABIndexOptions {
    SourceOptions source;
    bool extended = false;
    bool truncated = false;
    std::string eval;
    bool json = false;
};

int cmd_abindex(const ABIndexOptions& o, const std::string& command)
{
    const Source src = resolve(o.source);
    Report report(command, src.descriptor);
    ABPolynomial index = o.extended ? ext_ab_index(src.poset) : ab_index(src.poset);
    if (o.truncated) index = iota(index);
    std::string kind = o.extended ? "extended" : "plain";
    if (o.truncated) kind += "+truncated";
    report.j["method"] = kind;

    std::string text;
    if (o.eval.empty()) {
        text = to_string(index);
        report.j["result"] = Json{{"ab_polynomial", to_json(index)}, {"text", text}};
    } else {
        const auto v = parse_tuple(o.eval, 3, "--eval");
        const IntPolynomial value = evaluate(index, v[0], v[1], v[2]);
        text = ascending(value);
        report.j["result"] = poly_json(value, TermOrder::Ascending);
    }
    if (o.json)
        std::cout << report.dump() << "\n";
    else
        std::cout << text << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    SourceOptions source;
    std::string suite = "all";
    bool json = false;
};

struct CheckResult {
    std::string name;
    std::string status;  // pass, fail, skipped
    std::string detail;
};

bool has_nonnegative_coefficients(const ABPolynomial& p)
{
    for (const auto& [w, c] : p.terms())
        for (const auto& v : c.coeffs())
            if (v < 0) return false;
    return true;
}

std::vector<CheckResult> run_rlabeling(const Source& src)
{
    if (!src.labeling) return {{"rlabeling", "fail", "input has no edge labeling"}};
    if (auto missing = [&]() -> std::optional<std::string> {
            try {
                src.labeling->require_complete(src.poset);
            } catch (const InputError& e) {
                return std::string(e.what());
            }
            return std::nullopt;
        }())
        return {{"rlabeling", "fail", *missing}};
    const auto v = find_r_labeling_violation(src.poset, *src.labeling);
    if (!v) return {{"rlabeling", "pass", ""}};
    const std::string count = v->increasing_chains >= 2 ? "at least 2" : std::to_string(v->increasing_chains);
    return {{"rlabeling", "fail",
             "interval [" + src.poset.name(v->lower) + ", " + src.poset.name(v->upper) + "] has " + count +
                 " weakly increasing maximal chains"}};
}

std::vector<CheckResult> run_identities(const Source& src)
{
    const GradedPoset& P = src.poset;
    const std::size_t n = P.rank();
    std::vector<CheckResult> out;
    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        out.push_back({name, ok ? "pass" : "fail", ok ? "" : detail});
    };
    const bool labeled = src.labeling && src.labeling->is_complete() && verify_r_labeling(P, *src.labeling);

    if (n == 0) {
        for (const char* name : {"ext_ab_via_labeling", "omega", "iota_bottom_anchored", "ext_ab_at_chow",
                                 "truncated_ext_ab_at_chow", "cfhp_at_chow"})
            out.push_back({name, "skipped", "rank 0"});
    } else {
        const ABPolynomial ext = ext_ab_index(P);
        const ABPolynomial truncated = iota(ext);
        if (labeled) {
            const ABPolynomial via = ext_ab_via_labeling(P, *src.labeling);
            check("ext_ab_via_labeling", via == ext, "chain sum " + to_string(ext) + " vs labeling sum " + to_string(via));
            const ABPolynomial psi = ab_index(P);
            check("omega", omega_identity_check(P, *src.labeling),
                  "omega(" + to_string(psi) + ") = " + to_string(omega(psi)) + " vs " + to_string(ext));
        } else {
            out.push_back({"ext_ab_via_labeling", "skipped", "no R-labeling"});
            out.push_back({"omega", "skipped", "no R-labeling"});
        }
        const ABPolynomial anchored = bottom_anchored_ext_sum(P);
        const ABPolynomial lhs = ABPolynomial::letter_b() * truncated;
        check("iota_bottom_anchored", lhs == anchored && has_nonnegative_coefficients(truncated),
              "b*iota(exPsi) = " + to_string(lhs) + " vs " + to_string(anchored));

        const IntPolynomial mx{0, -1}, one = IntPolynomial::constant(1), x = IntPolynomial::x();
        const IntPolynomial scale = IntPolynomial{1, -1}.pow(n);
        const IntPolynomial H = augmented_chow_by_chains(P), Hr = chow_by_chains(P);
        const IntPolynomial e1 = evaluate(ext, mx, one, x), e2 = evaluate(truncated, mx, one, x);
        check("ext_ab_at_chow", e1 == scale * H, ascending(e1) + " vs (1-x)^n * " + to_string(H));
        check("truncated_ext_ab_at_chow", e2 == scale * Hr, ascending(e2) + " vs (1-x)^n * " + to_string(Hr));
        const RationalPair cf = coarse_flag_hp(P, mx, x);
        check("cfhp_at_chow", cf.numerator == cf.denominator * Hr,
              "cfHP(-x,x) = (" + ascending(cf.numerator) + ")/(" + ascending(cf.denominator) + ") vs " + to_string(Hr));
    }

    for (bool augmented : {false, true}) {
        const std::string name = augmented ? "augmented_chow_methods" : "chow_methods";
        std::vector<std::pair<std::string, IntPolynomial>> vals;
        vals.emplace_back("chains", augmented ? augmented_chow_by_chains(P) : chow_by_chains(P));
        vals.emplace_back("extab", augmented ? augmented_chow_by_extab(P) : chow_by_extab(P));
        if (labeled)
            vals.emplace_back("descents", augmented ? augmented_chow_by_descents(P, *src.labeling)
                                                    : chow_by_descents(P, *src.labeling));
        if (src.braid_n) vals.emplace_back("braid", augmented ? augmented_chow_braid(n) : chow_braid(n));
        bool ok = true;
        std::string detail;
        for (const auto& [m, p] : vals) {
            ok = ok && p == vals.front().second;
            detail += (detail.empty() ? "" : "; ") + m + ": " + to_string(p);
        }
        check(name, ok, detail);
    }
    return out;
}

int cmd_verify(const VerifyOptions& o, const std::string& command)
{
    const Source src = resolve(o.source);
    Report report(command, src.descriptor);
    std::vector<CheckResult> results;
    if (o.suite == "rlabeling" || o.suite == "all") {
        auto r = run_rlabeling(src);
        results.insert(results.end(), r.begin(), r.end());
    }
    if (o.suite == "identities" || o.suite == "all") {
        auto r = run_identities(src);
        results.insert(results.end(), r.begin(), r.end());
    }
    bool ok = true;
    Json checks = Json::array();
    for (const auto& r : results) {
        ok = ok && r.status != "fail";
        Json c{{"name", r.name}, {"status", r.status}};
        if (!r.detail.empty()) c["detail"] = r.detail;
        checks.push_back(c);
    }
    report.j["method"] = o.suite;
    report.j["result"] = checks;
    report.j["cross_check"] = Json{{"status", ok ? "pass" : "fail"}};
    if (o.json) {
        std::cout << report.dump() << "\n";
    } else {
        for (const auto& r : results)
            std::cout << r.name << ": " << r.status << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
    }
    return ok ? kExitOk : kExitDisagree;
}

// ---------------------------------------------------------------------------
// cfhp

struct CfhpOptions {
    SourceOptions source;
    std::string eval;
    bool json = false;
};

int cmd_cfhp(const CfhpOptions& o, const std::string& command)
{
    const Source src = resolve(o.source);
    const GradedPoset& P = src.poset;
    Report report(command, src.descriptor);
    if (o.eval.empty()) {
        const CoarseFlagNumerator num = coarse_flag_hp_symbolic(P);
        const IntPolynomial den = IntPolynomial{1, -1}.pow(P.rank());
        const std::string den_text = to_string(den, "t", TermOrder::Ascending);
        report.j["result"] = Json{{"numerator", to_string(num)}, {"denominator", den_text}};
        if (o.json)
            std::cout << report.dump() << "\n";
        else
            std::cout << "numerator: " << to_string(num) << "\ndenominator: " << den_text << "\n";
        return kExitOk;
    }

    const auto v = parse_tuple(o.eval, 2, "--eval");
    const RationalPair cf = coarse_flag_hp(P, v[0], v[1]);
    Json result{{"numerator", poly_json(cf.numerator, TermOrder::Ascending)},
                {"denominator", poly_json(cf.denominator, TermOrder::Ascending)}};
    int code = kExitOk;
    std::optional<IntPolynomial> chow;
    if (v[0] == IntPolynomial{0, -1} && v[1] == IntPolynomial::x()) {
        chow = exact_div(cf.numerator, cf.denominator);
        const IntPolynomial expected = chow_by_chains(P);
        const bool ok = *chow == expected;
        result["chow"] = poly_json(*chow);
        Json cc{{"status", ok ? "pass" : "fail"}};
        if (!ok) cc["detail"] = "chow_by_chains gives " + to_string(expected);
        report.j["cross_check"] = cc;
        if (!ok) code = kExitDisagree;
    }
    report.j["result"] = result;
    if (o.json) {
        std::cout << report.dump() << "\n";
    } else {
        if (chow) std::cout << to_string(*chow) << "\n";
        std::cout << "numerator: " << ascending(cf.numerator) << "\ndenominator: " << ascending(cf.denominator)
                  << "\n";
        if (code != kExitOk) std::cout << "cross-check: fail (chow_by_chains gives " << to_string(chow_by_chains(P)) << ")\n";
    }
    return code;
}

// ---------------------------------------------------------------------------
// braid

struct BraidOptions {
    std::size_t n = 0;
    bool augmented = false;
    bool gamma = false;
};

int cmd_braid(const BraidOptions& o, const std::string& command)
{
    Report report(command, "braid:" + std::to_string(o.n));
    const IntPolynomial h = o.augmented ? augmented_chow_braid(o.n) : chow_braid(o.n);
    report.j["method"] = "inversion-sequences";
    report.j["augmented"] = o.augmented;
    report.j["result"] = poly_json(h);
    report.j["gamma"] = to_json(gamma_vector(h, chow_center(o.n, o.augmented)));
    std::cout << report.dump() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    std::string command;
    for (int i = 0; i < argc; ++i) command += (i ? " " : "") + std::string(argv[i]);

    CLI::App app{"Chow polynomials and extended ab-indices of graded posets"};
    app.require_subcommand(1);

    ChowOptions chow_opts;
    auto* chow = app.add_subcommand("chow", "Chow polynomial (or augmented) of a graded poset");
    add_source_options(chow, chow_opts.source);
    chow->add_flag("--augmented", chow_opts.augmented, "augmented Chow polynomial");
    chow->add_option("--method", chow_opts.method, "algorithm")
        ->check(CLI::IsMember({"chains", "descents", "extab", "all"}));
    chow->add_flag("--gamma", chow_opts.gamma, "also print the gamma-vector");
    chow->add_flag("--json", chow_opts.json, "emit a JSON report");

    ABIndexOptions ab_opts;
    auto* abindex = app.add_subcommand("abindex", "ab-index, extended or truncated");
    add_source_options(abindex, ab_opts.source);
    abindex->add_flag("--extended", ab_opts.extended, "Poincare-extended ab-index");
    abindex->add_flag("--truncated", ab_opts.truncated, "delete the first letter of every word");
    abindex->add_option("--eval", ab_opts.eval, "evaluate at y,a,b (polynomials in x)");
    abindex->add_flag("--json", ab_opts.json, "emit a JSON report");

    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "check the R-labeling and the identity suite");
    add_source_options(verify, verify_opts.source);
    verify->add_option("--suite", verify_opts.suite, "which checks to run")
        ->check(CLI::IsMember({"rlabeling", "identities", "all"}));
    verify->add_flag("--json", verify_opts.json, "emit a JSON report");

    CfhpOptions cf_opts;
    auto* cfhp = app.add_subcommand("cfhp", "coarse flag Hilbert-Poincare series");
    add_source_options(cfhp, cf_opts.source);
    cfhp->add_option("--eval", cf_opts.eval, "evaluate at y,t (polynomials in x)");
    cfhp->add_flag("--json", cf_opts.json, "emit a JSON report");

    BraidOptions braid_opts;
    auto* braid = app.add_subcommand("braid", "closed formula for the braid arrangement (JSON output)");
    braid->add_option("--n", braid_opts.n, "rank n of Pi_n")->required();
    braid->add_flag("--augmented", braid_opts.augmented, "augmented Chow polynomial");
    braid->add_flag("--gamma", braid_opts.gamma, "accepted for symmetry with chow; the gamma-vector is always reported");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*chow) return cmd_chow(chow_opts, command);
        if (*abindex) return cmd_abindex(ab_opts, command);
        if (*verify) return cmd_verify(verify_opts, command);
        if (*cfhp) return cmd_cfhp(cf_opts, command);
        if (*braid) return cmd_braid(braid_opts, command);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ArithmeticError& e) {
        std::cerr << "arithmetic failure: " << e.what() << "\n";
        return kExitDisagree;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
