#pragma once

/// @file app.hpp
/// @brief The modsupp command-line front end as a library function, so the
/// fixture runner and the tests can drive it in-process.
///
/// Exit codes: 0 success, 1 internal error, 2 invalid input or violated
/// hypothesis, 3 cap exceeded, 4 verified mismatch (routes disagree or a
/// fixture fails).

#include "modsupp/io/json.hpp"
#include "modsupp/modsupp.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef MODSUPP_FIXTURE_DIR
#define MODSUPP_FIXTURE_DIR "fixtures"
#endif

namespace modsupp::cli {

using io::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitMismatch = 4;

inline int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::validation:
        case ErrorKind::hypothesis: return kExitInput;
        case ErrorKind::cap_exceeded: return kExitCap;
        case ErrorKind::internal: return kExitInternal;
    }
    return kExitInternal;
}

inline json error_document(std::string_view kind, const std::string& message) {
    return json{{"error", {{"kind", std::string(kind)}, {"message", message}}}};
}

struct Flags {
    std::string command;
    std::string problem;
    std::string format = "json";
    std::string caps;
    unsigned threads = 0;
    bool threads_set = false;
    std::string method = "all";
    std::uint64_t characteristic = 0;
    bool characteristic_set = false;
    std::uint64_t seed = 1;
    bool seed_set = false;
    bool unchecked = false;
    std::string ideal_path;
    std::uint64_t q = 0, n = 0, k = 0, samples = 0;
    std::string fixtures = MODSUPP_FIXTURE_DIR;
    std::string only;
};

struct Result {
    Result() = default;
    Result(json d, int code = kExitOk, std::string text = {}) : doc(std::move(d)), exit(code), table(std::move(text)) {}

    json doc;
    int exit = kExitOk;
    std::string table;  ///< preformatted text for --format table; empty means generic rendering
};

/// Problem file plus flag resolution. Flags override problem options.
class Context {
  public:
    explicit Context(const Flags& flags) : flags_(flags) {
        std::string overrides = flags.caps;
        if (flags.threads_set) overrides += (overrides.empty() ? "" : ",") + std::string("threads=") + std::to_string(flags.threads);
        problem_ = io::parse_problem(io::read_json_file(flags.problem), Limits::from_environment(), overrides);
    }

    const io::Problem& problem() const { return problem_; }
    const Ring& ring() const { return problem_.ring; }
    const Limits& limits() const { return problem_.limits; }
    bool unchecked() const { return flags_.unchecked || problem_.options.unchecked.value_or(false); }
    std::uint64_t characteristic() const { return flags_.characteristic_set ? flags_.characteristic : problem_.options.characteristic.value_or(0); }

    bool has_support() const { return problem_.support.has_value(); }

    const Support& support() const {
        if (!problem_.support) throw ValidationError("command '" + flags_.command + "' needs a \"support\" in the problem file");
        return *problem_.support;
    }

    const Code& code() const {
        if (!problem_.code) throw ValidationError("command '" + flags_.command + "' needs a \"code\" in the problem file");
        return *problem_.code;
    }

    json header() const {
        json out{{"command", flags_.command}, {"ring", ring().name()}, {"n", problem_.n}};
        if (problem_.support) {
            out["support"] = problem_.support->describe();
            out["u"] = problem_.support->u();
        }
        return out;
    }

    json vec(const Vector& v) const { return io::vector_to_json(ring(), v); }
    json vecs(const std::vector<Vector>& vs) const { return io::vectors_to_json(ring(), vs); }

  private:
    const Flags& flags_;
    io::Problem problem_;
};

// ---- rendering ----

namespace detail {

inline void render_lines(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& lines) {
    auto scalar_array = [](const json& a) {
        return std::all_of(a.begin(), a.end(), [](const json& x) { return !x.is_object() && !(x.is_array() && !x.empty() && x.front().is_object()); });
    };
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) render_lines(value, prefix.empty() ? key : prefix + "." + key, lines);
    } else if (j.is_array() && !scalar_array(j)) {
        for (std::size_t i = 0; i < j.size(); ++i) render_lines(j[i], prefix + "[" + std::to_string(i) + "]", lines);
    } else {
        lines.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

/// "key  value" lines with aligned values.
inline std::string render_table(const json& doc) {
    std::vector<std::pair<std::string, std::string>> lines;
    render_lines(doc, "", lines);
    std::size_t width = 0;
    for (const auto& [k, v] : lines) width = std::max(width, k.size());
    std::ostringstream out;
    for (const auto& [k, v] : lines) out << std::left << std::setw(static_cast<int>(width + 2)) << k << v << '\n';
    return out.str();
}

/// Betti table with rows indexed by degree - r and columns by r, zeros as '.'.
inline std::string render_betti(const BettiTable& t) {
    std::map<std::uint64_t, std::map<std::size_t, std::uint64_t>> rows;
    std::map<std::size_t, std::uint64_t> totals{{0, 1}};
    rows[0][0] = 1;
    for (const auto& [r, row] : t.coarse) {
        for (const auto& [d, value] : row) {
            rows[d - r][r] += value;
            totals[r] += value;
        }
    }
    const std::size_t cols = t.projective_dimension + 1;
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{""};
    for (std::size_t r = 0; r < cols; ++r) head.push_back(std::to_string(r));
    cells.push_back(head);
    std::vector<std::string> total{"total:"};
    for (std::size_t r = 0; r < cols; ++r) total.push_back(std::to_string(totals[r]));
    cells.push_back(total);
    for (const auto& [shift, row] : rows) {
        std::vector<std::string> line{std::to_string(shift) + ":"};
        for (std::size_t r = 0; r < cols; ++r) {
            const auto it = row.find(r);
            line.push_back(it == row.end() ? "." : std::to_string(it->second));
        }
        cells.push_back(line);
    }
    std::vector<std::size_t> width(cols + 1, 0);
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    }
    std::ostringstream out;
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) out << (c ? " " : "") << std::setw(static_cast<int>(width[c])) << line[c];
        out << '\n';
    }
    return out.str();
}

inline json coarse_to_json(const std::map<std::size_t, std::map<std::uint64_t, std::uint64_t>>& coarse) {
    json out = json::object();
    for (const auto& [r, row] : coarse) {
        json cells = json::object();
        for (const auto& [d, value] : row) cells[std::to_string(d)] = value;
        out[std::to_string(r)] = cells;
    }
    return out;
}

}  // namespace detail

// ---- commands ----

inline json axiom_witness_json(const Context& ctx, const AxiomWitness& w) {
    json out{{"axiom", w.axiom}, {"v", ctx.vec(w.v)}};
    if (w.axiom == "P2") out["r"] = io::element_to_json(ctx.ring(), w.r);
    if (w.axiom == "P3") out["w"] = ctx.vec(w.w);
    out["message"] = describe(w);
    return out;
}

inline Result cmd_check_support(const Context& ctx) {
    const Support& s = ctx.support();
    json out = ctx.header();
    out["pseudo"] = s.pseudo();
    if (s.certified_support()) {
        out["is_support"] = true;
        out["method"] = "certificate";
        out["witness"] = nullptr;
    } else {
        const SupportCheck check = is_support(s, ctx.limits());
        out["is_support"] = check.holds;
        out["method"] = "exhaustive";
        out["witness"] = check.witness ? axiom_witness_json(ctx, *check.witness) : json(nullptr);
    }
    return {out};
}

inline Result cmd_check_modular(const Context& ctx) {
    const Support& s = ctx.support();
    json out = ctx.header();
    bool support_holds = s.certified_support();
    if (!support_holds) {
        const SupportCheck check = is_support(s, ctx.limits());
        support_holds = check.holds;
        if (!support_holds && !ctx.unchecked()) throw HypothesisError("not a support: " + describe(*check.witness) + " (pass --unchecked to test modularity anyway)");
    }
    out["is_support"] = support_holds;
    ModularCheck check;
    if (support_holds && s.certified_modular()) {
        out["method"] = "certificate";
    } else {
        check = check_modular_exhaustive(s, ctx.limits());
        out["method"] = "exhaustive";
    }
    out["modular"] = check.holds;
    if (check.witness) {
        const auto& w = *check.witness;
        out["witness"] = json{{"v", ctx.vec(w.v)},
                              {"w", ctx.vec(w.w)},
                              {"coordinate", w.i},
                              {"sigma_v", s.evaluate(w.v)},
                              {"sigma_w", s.evaluate(w.w)}};
    } else {
        out["witness"] = nullptr;
    }
    if (check.holds && support_holds) {
        try {
            const ModularDecomposition d = decompose_modular(s, ctx.limits());
            json factors = json::array();
            for (std::size_t i = 0; i < d.blocks.size(); ++i) {
                factors.push_back(json{{"ring", ctx.ring().factor(i).name()}, {"coordinates", d.blocks[i]}, {"support", io::support_to_json(d.factor_supports[i])}});
            }
            out["decomposition"] = json{{"coordinate_factor", d.coordinate_factor}, {"factors", factors}};
        } catch (const CapExceeded& e) {
            out["decomposition"] = json{{"skipped", e.what()}};
        }
    }
    return {out};
}

inline Result cmd_minimal_codewords(const Context& ctx) {
    const Code& C = ctx.code();
    const MinimalCodewordSet mins = min_codewords(C, ctx.support());
    json out = ctx.header();
    out["classes"] = mins.classes.size();
    out["members"] = mins.member_count();
    json classes = json::array();
    std::vector<Vector> reps;
    for (const auto& cls : mins.classes) {
        classes.push_back(json{{"support", cls.support}, {"weight", weight(cls.support)}, {"representative", ctx.vec(cls.representative)}, {"members", ctx.vecs(cls.members)}});
        reps.push_back(cls.representative);
    }
    out["minimal"] = classes;
    out["min_weight"] = min_weight(C, ctx.support());
    out["witnesses"] = ctx.vecs(reps);
    return {out};
}

inline Result cmd_socle(const Context& ctx) {
    const Code S = socle(ctx.code());
    json out = ctx.header();
    out["code_size"] = ctx.code().size();
    out["size"] = S.size();
    out["M"] = big_M(S);
    out["generators"] = ctx.vecs(S.generators());
    if (ctx.has_support()) out["socle_support"] = code_support_exact(ctx.support(), S);
    return {out};
}

inline Result cmd_invariants(const Context& ctx) {
    const Code& C = ctx.code();
    json out = ctx.header();
    out["size"] = C.size();
    out["mu"] = mu_components(C);
    out["M"] = big_M(C);
    const Code S = socle(C);
    out["socle"] = json{{"size", S.size()}, {"M", big_M(S)}};
    json factors = json::array();
    const std::vector<Code> parts = decompose(C);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        factors.push_back(json{{"ring", C.ring().factor(i).name()},
                               {"size", parts[i].size()},
                               {"mu", mu_components(parts[i]).front()},
                               {"generators", io::vectors_to_json(parts[i].ring(), parts[i].generators())}});
    }
    out["factors"] = factors;
    try {
        const MaxMinGenset g = max_min_genset_size(C);
        out["max_min_genset"] = json{{"size", g.size}, {"witness", ctx.vecs(g.witness)}};
    } catch (const CapExceeded& e) {
        out["max_min_genset"] = json{{"skipped", e.what()}};
    }
    return {out};
}

inline Result cmd_ideal(const Context& ctx) {
    const CodeIdeal I = ideal_of_code(ctx.code(), ctx.support());
    json out = ctx.header();
    out["generators"] = I.ideal.generators();
    out["text"] = I.ideal.to_text();
    out["witnesses"] = ctx.vecs(I.representatives);
    return {out};
}

inline json betti_json(const BettiTable& t) {
    json multigraded = json::array();
    json cancelled = json::array();
    for (const StrandEntry& e : t.strands) {
        if (e.betti != 0) multigraded.push_back(json{{"r", e.r}, {"degree", e.degree}, {"beta", e.betti}});
    }
    for (const auto& [r, row] : t.taylor_coarse) {
        if (!t.coarse.count(r)) cancelled.push_back(r);
    }
    return json{{"char", t.characteristic},
                {"u", t.u},
                {"generators", t.generators},
                {"pd", t.projective_dimension},
                {"coarse", detail::coarse_to_json(t.coarse)},
                {"min_shifts", t.min_shifts},
                {"multigraded", multigraded},
                {"taylor", {{"coarse", detail::coarse_to_json(t.taylor_coarse)}, {"fully_cancelled", cancelled}}}};
}

inline Result cmd_betti(const Flags& flags) {
    json out{{"command", "betti"}};
    std::optional<MonomialIdeal> ideal;
    std::uint64_t characteristic = flags.characteristic;
    Limits limits = Limits::from_environment();
    limits.apply_overrides(flags.caps);
    if (flags.threads_set) limits.threads = flags.threads;
    if (!flags.ideal_path.empty()) {
        std::ifstream in(flags.ideal_path);
        if (!in) throw ValidationError("cannot open '" + flags.ideal_path + "'");
        ideal = io::parse_ideal_text(in);
        out["ideal"] = ideal->to_text();
    } else {
        if (flags.problem.empty()) throw ValidationError("betti needs a problem file or --ideal FILE");
        const Context ctx(flags);
        out = ctx.header();
        characteristic = ctx.characteristic();
        limits = ctx.limits();
        const CodeIdeal I = ideal_of_code(ctx.code(), ctx.support());
        ideal = I.ideal;
        out["ideal"] = ideal->to_text();
    }
    const BettiTable t = betti_numbers(*ideal, characteristic, limits);
    out.update(betti_json(t));
    return {out, kExitOk, detail::render_betti(t)};
}

inline json profile_json(const Context& ctx, const WeightProfile& p) {
    json out{{"M", p.M}, {"d", p.d}};
    json w = json::array();
    for (const auto& gens : p.witnesses) w.push_back(ctx.vecs(gens));
    out["witnesses"] = w;
    if (!p.crosscheck.empty()) out["sj_crosscheck"] = p.crosscheck;
    return out;
}

inline Result cmd_weights(const Context& ctx, const std::string& method) {
    const Code& C = ctx.code();
    const Support& s = ctx.support();
    const std::vector<std::string> routes = method == "all" ? std::vector<std::string>{"fast", "oracle", "betti"} : std::vector<std::string>{method};
    json out = ctx.header();
    out["method"] = method;
    json per_route = json::object();
    std::vector<std::pair<std::string, WeightProfile>> ran;
    for (const std::string& route : routes) {
        try {
            WeightProfile p;
            if (route == "fast") p = gen_weights_fast(C, s);
            else if (route == "oracle") p = gen_weights_oracle(C, s, ctx.unchecked());
            else p = weights_from_betti(C, s, ctx.characteristic(), ctx.unchecked());
            per_route[route] = profile_json(ctx, p);
            ran.emplace_back(route, std::move(p));
        } catch (const Error& e) {
            if (routes.size() == 1 || e.kind() == ErrorKind::internal || e.kind() == ErrorKind::validation) throw;
            per_route[route] = json{{"skipped", std::string(to_string(e.kind()))}, {"reason", e.what()}};
        }
    }
    if (ran.empty()) throw HypothesisError("no weight route is applicable: " + per_route.dump());
    out["routes"] = per_route;
    bool agree = true;
    json mismatches = json::array();
    for (std::size_t k = 1; k < ran.size(); ++k) {
        if (ran[k].second.M != ran[0].second.M || ran[k].second.d != ran[0].second.d) {
            agree = false;
            mismatches.push_back(ran[0].first + " vs " + ran[k].first);
        }
    }
    out["agree"] = agree;
    if (!agree) out["mismatch"] = mismatches;
    out["M"] = ran[0].second.M;
    out["d"] = ran[0].second.d;
    out["witnesses"] = per_route[ran[0].first]["witnesses"];
    return {out, agree ? kExitOk : kExitMismatch};
}

inline Result cmd_matroid(const Context& ctx) {
    const Code& C = ctx.code();
    const bool hamming_default = !ctx.has_support();
    const Support s = hamming_default ? Support::hamming(C.ring(), C.n()) : ctx.support();
    json out = ctx.header();
    out["support"] = s.describe();
    const std::vector<IndexSet> circ = circuits(C, s);
    out["circuits"] = circ;
    const MinimalCodewordSet mins = min_codewords(C, s);
    std::vector<Vector> reps;
    for (const IndexSet& c : circ) {
        for (const auto& cls : mins.classes) {
            IndexSet set;
            for (std::size_t k = 0; k < cls.support.size(); ++k) {
                if (cls.support[k] != 0) set.push_back(k);
            }
            if (set == c) reps.push_back(cls.representative);
        }
    }
    out["witnesses"] = ctx.vecs(reps);
    if (C.ring().is_field() && s.kind() == SupportKind::hamming && C.n() <= kMatroidLengthCap) {
        const auto indep = matroid_independent_sets(C);
        out["independent_sets"] = indep;
        out["rank"] = indep.back().size();
    } else {
        out["independent_sets"] = json{{"skipped", "needs a field, the Hamming support and n <= " + std::to_string(kMatroidLengthCap)}};
    }
    const MaximalGeneration g = maximal_generation(C, s);
    out["maximal_generation"] = json{{"generated", g.generated}, {"maximal_words", ctx.vecs(g.maximal_words)}};
    return {out};
}

inline Result cmd_estimate(const Flags& flags) {
    Limits limits = Limits::from_environment();
    limits.apply_overrides(flags.caps);
    if (flags.threads_set) limits.threads = flags.threads;
    const MaximalEstimate e = estimate_maximal(flags.q, flags.n, flags.k);
    json out{{"command", "estimate-maximal"}, {"q", flags.q}, {"n", flags.n}, {"k", flags.k}};
    out["formula"] = json{{"numerator", e.numerator.get_str()},
                          {"denominator", e.denominator.get_str()},
                          {"reduced", e.value.get_str()},
                          {"value", e.value.get_d()}};
    if (flags.samples > 0) {
        const MonteCarloResult mc = monte_carlo_maximal(flags.q, flags.n, flags.k, flags.samples, flags.seed, limits);
        // Binomial sigma at the formula value: the bound is a lower bound on the true proportion.
        const double f = std::clamp(e.value.get_d(), 0.0, 1.0);
        const double sigma = std::sqrt(f * (1.0 - f) / static_cast<double>(mc.samples));
        out["monte_carlo"] = json{{"samples", mc.samples},
                                  {"seed", flags.seed},
                                  {"generated", mc.generated},
                                  {"proportion", mc.proportion()},
                                  {"standard_error", mc.standard_error()},
                                  {"binomial_sigma", sigma},
                                  {"bound_holds", mc.proportion() >= e.value.get_d() - 3.0 * sigma}};
    }
    return {out};
}

// ---- fixture runner ----

namespace detail {

/// Every key of an expected object must match; arrays must match elementwise.
inline bool subset_match(const json& expected, const json& actual, const std::string& path, std::string& diff) {
    if (expected.is_object()) {
        if (!actual.is_object()) {
            diff = path + ": expected an object, got " + actual.dump();
            return false;
        }
        for (const auto& [key, value] : expected.items()) {
            if (!actual.contains(key)) {
                diff = path + "." + key + ": missing";
                return false;
            }
            if (!subset_match(value, actual.at(key), path + "." + key, diff)) return false;
        }
        return true;
    }
    if (expected.is_array()) {
        if (!actual.is_array() || actual.size() != expected.size()) {
            diff = path + ": expected " + expected.dump() + ", got " + actual.dump();
            return false;
        }
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (!subset_match(expected[i], actual[i], path + "[" + std::to_string(i) + "]", diff)) return false;
        }
        return true;
    }
    if (expected != actual) {
        diff = path + ": expected " + expected.dump() + ", got " + actual.dump();
        return false;
    }
    return true;
}

}  // namespace detail

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

inline int run_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"modsupp"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

inline Result cmd_verify(const Flags& flags) {
    namespace fs = std::filesystem;
    const fs::path dir(flags.fixtures);
    if (!fs::is_directory(dir)) throw ValidationError("fixture directory '" + flags.fixtures + "' does not exist");
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string file = entry.path().filename().string();
        const std::string suffix = ".expected.json";
        if (file.size() > suffix.size() && file.compare(file.size() - suffix.size(), suffix.size(), suffix) == 0) {
            names.push_back(file.substr(0, file.size() - suffix.size()));
        }
    }
    std::sort(names.begin(), names.end());
    if (!flags.only.empty()) {
        if (std::find(names.begin(), names.end(), flags.only) == names.end()) throw ValidationError("no fixture named '" + flags.only + "'");
        names = {flags.only};
    }
    json results = json::array();
    std::size_t passed = 0, failed = 0;
    std::ostringstream table;
    for (const std::string& name : names) {
        const json expected = io::read_json_file((dir / (name + ".expected.json")).string());
        const std::string problem = (dir / (name + ".json")).string();
        for (const json& cmd : io::detail::field(expected, "commands", "expected-output file")) {
            std::vector<std::string> args;
            for (const json& a : io::detail::field(cmd, "args", "fixture command")) {
                const std::string s = a.get<std::string>();
                args.push_back(s == "{fixture}" ? problem : s);
            }
            std::ostringstream sub_out, sub_err;
            const int code = run_args(args, sub_out, sub_err);
            const int want = cmd.value("exit", 0);
            std::string diff;
            bool ok = code == want;
            if (!ok) diff = "exit code " + std::to_string(code) + ", expected " + std::to_string(want);
            if (ok && cmd.contains("expect")) {
                json actual;
                try {
                    actual = json::parse(sub_out.str());
                } catch (const json::exception&) {
                    ok = false;
                    diff = "output is not JSON";
                }
                if (ok) ok = detail::subset_match(cmd.at("expect"), actual, "$", diff);
            }
            std::string shown = cmd.at("args").front().get<std::string>();
            for (std::size_t i = 1; i < args.size(); ++i) {
                if (cmd.at("args")[i] != "{fixture}") shown += " " + args[i];
            }
            json entry{{"fixture", name}, {"command", shown}, {"status", ok ? "pass" : "fail"}};
            if (!ok) entry["diff"] = diff;
            results.push_back(entry);
            (ok ? passed : failed) += 1;
            table << std::left << std::setw(20) << name << std::setw(44) << shown << (ok ? "PASS" : "FAIL  " + diff) << '\n';
        }
    }
    json doc{{"command", "verify-paper"}, {"fixtures", names.size()}, {"passed", passed}, {"failed", failed}, {"results", results}};
    table << passed << " passed, " << failed << " failed\n";
    return {doc, failed == 0 ? kExitOk : kExitMismatch, table.str()};
}

// ---- entry point ----

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Flags flags;
    CLI::App app{"Supports, generalized weights and Betti numbers of linear codes over finite rings", "modsupp"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every command");

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--caps", flags.caps, "Cap overrides, e.g. enumeration=1000000,search=100000");
        sub->add_option("--threads", flags.threads, "Worker threads (0 = hardware)")->each([&](const std::string&) { flags.threads_set = true; });
    };
    auto with_problem = [&](const std::string& name, const std::string& help, bool required = true) {
        CLI::App* sub = app.add_subcommand(name, help);
        auto* opt = sub->add_option("problem", flags.problem, "Problem JSON file ('-' reads stdin)");
        if (required) opt->required();
        sub->add_flag("--unchecked", flags.unchecked, "Admit pseudo-supports and non-modular supports where a route allows it");
        common(sub);
        return sub;
    };
    auto add_char = [&](CLI::App* sub) {
        sub->add_option("--char", flags.characteristic, "Coefficient field characteristic (0 or a prime)")->each([&](const std::string&) {
            flags.characteristic_set = true;
        });
    };

    with_problem("check-support", "Check the support axioms, with a witness on failure");
    with_problem("check-modular", "Check modularity and decompose along ring factors");
    with_problem("minimal-codewords", "Codewords of minimal support, grouped by support");
    with_problem("socle", "The socle 0 :_C J");
    with_problem("invariants", "|C|, mu, M and the factor decomposition");
    with_problem("ideal", "The monomial ideal of the code");
    CLI::App* betti = with_problem("betti", "Graded Betti numbers of S/I", false);
    betti->add_option("--ideal", flags.ideal_path, "Ideal file: one monomial per line as space-separated exponents");
    add_char(betti);
    CLI::App* weights = with_problem("weights", "Generalized weights");
    weights->add_option("--method", flags.method, "Route")->check(CLI::IsMember({"fast", "oracle", "betti", "all"}));
    add_char(weights);
    with_problem("matroid", "Circuits, independent sets and maximal-codeword generation");
    CLI::App* estimate = app.add_subcommand("estimate-maximal", "Share of codes generated by maximal codewords");
    estimate->add_option("--q", flags.q, "Field size")->required();
    estimate->add_option("--n", flags.n, "Length")->required();
    estimate->add_option("--k", flags.k, "Dimension")->required();
    estimate->add_option("--samples", flags.samples, "Monte Carlo samples (0 = formula only)");
    estimate->add_option("--seed", flags.seed, "Master seed");
    common(estimate);
    CLI::App* verify = app.add_subcommand("verify-paper", "Run the bundled fixtures against their expected outputs");
    verify->add_option("--fixtures", flags.fixtures, "Fixture directory");
    verify->add_option("--only", flags.only, "Run a single fixture");
    common(verify);

    auto emit_error = [&](std::string_view kind, const std::string& message, int code) {
        out << error_document(kind, message).dump(2) << '\n';
        err << "modsupp: " << message << '\n';
        return code;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return emit_error("validation", e.what(), kExitInput);
    }
    flags.command = app.get_subcommands().front()->get_name();

    try {
        Result result;
        const std::string& c = flags.command;
        if (c == "betti") result = cmd_betti(flags);
        else if (c == "estimate-maximal") result = cmd_estimate(flags);
        else if (c == "verify-paper") result = cmd_verify(flags);
        else {
            const Context ctx(flags);
            if (c == "check-support") result = cmd_check_support(ctx);
            else if (c == "check-modular") result = cmd_check_modular(ctx);
            else if (c == "minimal-codewords") result = cmd_minimal_codewords(ctx);
            else if (c == "socle") result = cmd_socle(ctx);
            else if (c == "invariants") result = cmd_invariants(ctx);
            else if (c == "ideal") result = cmd_ideal(ctx);
            else if (c == "weights") result = cmd_weights(ctx, flags.method);
            else result = cmd_matroid(ctx);
        }
        if (flags.format == "table") {
            out << (result.table.empty() ? detail::render_table(result.doc) : result.table);
        } else {
            out << result.doc.dump(2) << '\n';
        }
        if (result.exit == kExitMismatch) err << "modsupp: verified mismatch (see output)\n";
        return result.exit;
    } catch (const Error& e) {
        return emit_error(to_string(e.kind()), e.what(), exit_code(e.kind()));
    } catch (const json::exception& e) {
        return emit_error("validation", std::string("malformed JSON value: ") + e.what(), kExitInput);
    } catch (const std::exception& e) {
        return emit_error("internal", e.what(), kExitInternal);
    }
}

}  // namespace modsupp::cli
