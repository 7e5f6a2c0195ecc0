// One PASS/FAIL line per acceptance criterion. Exits nonzero only when a
// criterion fails outside the documented-unattainable list below.

#include "modsupp/cli/app.hpp"
#include "modsupp/modsupp.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace modsupp;

namespace {

const std::string kFixtures = MODSUPP_FIXTURE_DIR;

// Pinned budgets and tolerances.
constexpr double kExampleSeconds = 5.0;
constexpr double kPropertySeconds = 600.0;
constexpr double kEstimateSeconds = 120.0;
constexpr std::uint64_t kMonteCarloSamples = 10000;
constexpr double kSigmaBand = 3.0;

struct Report {
    std::vector<std::string> failures;
    std::vector<std::string> unattainable;  // failures matching a documented-unattainable entry
    std::string note;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    // A component known to be unattainable: reported as FAIL, but does not fail the run.
    void expect_unattainable(bool ok, const std::string& what) {
        if (!ok) unattainable.push_back(what);
    }
};

Vector ints(const Ring& R, std::initializer_list<int> xs) {
    Vector v;
    for (const int x : xs) v.push_back(R.from_int(x));
    return v;
}

Support omega_z6() {
    return Support::table(Ring::zm(6), 1, {{0, 0}, {2, 1}, {0, 1}, {2, 0}, {0, 1}, {2, 1}});
}

std::string join(const std::vector<std::uint64_t>& d) {
    std::string out = "(";
    for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
    return out + ")";
}

int cli_exit(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    return cli::run_args(args, out, err);
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name + ".json"; }

template <class E, class F>
bool throws(F&& f) {
    try {
        f();
    } catch (const E&) {
        return true;
    } catch (...) {
        return false;
    }
    return false;
}

void criterion1(Report& r) {
    const Ring R = Ring::zm(6);
    const Support sigma = Support::compose_linear(Support::product({omega_z6(), omega_z6(), omega_z6()}),
                                                  {ints(R, {3, 4, 1}), ints(R, {5, 3, 3}), ints(R, {2, 4, 5})});
    const Code C(R, 3, {ints(R, {3, 1, 2}), ints(R, {2, 4, 3})});
    const MinimalCodewordSet mins = min_codewords(C, sigma);
    std::set<Vector> words;
    std::set<SupportValue> supports;
    for (const auto& cls : mins.classes) {
        supports.insert(cls.support);
        for (const Vector& v : cls.members) words.insert(v);
    }
    const std::set<Vector> listed = {ints(R, {3, 3, 3}), ints(R, {0, 4, 2}), ints(R, {2, 0, 4}), ints(R, {3, 3, 0}), ints(R, {0, 2, 4}), ints(R, {4, 0, 2})};
    const std::set<SupportValue> listed_supports = {{0, 0, 2, 0, 2, 0}, {0, 0, 0, 0, 0, 1}, {0, 1, 0, 1, 0, 0}, {2, 0, 0, 0, 0, 0}};
    r.expect(words == listed, "Min(C) differs from the six listed codewords");
    r.expect(supports == listed_supports, "minimal supports differ");
    const MonomialIdeal expected(6, {{2, 0, 0, 0, 0, 0}, {0, 1, 0, 1, 0, 0}, {0, 0, 2, 0, 2, 0}, {0, 0, 0, 0, 0, 1}});
    const CodeIdeal I = ideal_of_code(C, sigma);
    r.expect(I.ideal.generators() == expected.generators(), "I_C = " + I.ideal.to_text());
    const std::vector<std::uint64_t> d = {1, 3, 5, 9};
    const WeightProfile betti = weights_from_betti(C, sigma);
    const WeightProfile fast = gen_weights_fast(C, sigma);
    r.expect(betti.M == 4 && betti.d == d, "betti route M=" + std::to_string(betti.M) + " d=" + join(betti.d));
    r.expect(fast.M == 4 && fast.d == d, "fast route M=" + std::to_string(fast.M) + " d=" + join(fast.d));
    r.note = "M=4 d=(1,3,5,9), I_C=(" + I.ideal.to_text() + ")";
}

void criterion2(Report& r) {
    const Ring F = Ring::field(2);
    const Code C(F, 4, {ints(F, {1, 1, 0, 0}), ints(F, {0, 1, 1, 0}), ints(F, {0, 0, 1, 1})});
    const Support h = Support::hamming(F, 4);
    const BettiTable t = betti_numbers(ideal_of_code(C, h).ideal);
    r.expect(t.betti(1, 2) == 6, "beta_{1,2}=" + std::to_string(t.betti(1, 2)));
    r.expect(t.betti(2, 3) == 8, "beta_{2,3}=" + std::to_string(t.betti(2, 3)));
    r.expect(t.projective_dimension == 3, "pd=" + std::to_string(t.projective_dimension));
    // Documented unattainable: the alternating sum 1 - 6 + 8 - beta_{3,4} must
    // vanish (S/I has dimension 1 < 4), which forces beta_{3,4} = 3.
    r.expect_unattainable(t.betti(3, 4) == 2, "beta_{3,4}=" + std::to_string(t.betti(3, 4)) + ", expected 2 (the Euler characteristic forces 3)");
    const std::vector<std::uint64_t> d = {2, 3, 4};
    r.expect(gen_weights_fast(C, h).d == d, "fast route");
    r.expect(gen_weights_oracle(C, h).d == d, "oracle route");
    r.expect(weights_from_betti(C, h).d == d, "betti route");
    std::vector<std::size_t> cancelled;
    for (const auto& [deg, row] : t.taylor_coarse) {
        if (!t.coarse.count(deg)) cancelled.push_back(deg);
    }
    r.expect(cancelled == std::vector<std::size_t>{4, 5, 6}, "Taylor F_4..F_6 not exactly the fully cancelled modules");
    r.note = "beta_{1,2}=6 beta_{2,3}=8 beta_{3,4}=" + std::to_string(t.betti(3, 4)) + " pd=3 d=(2,3,4), F_4..F_6 cancelled";
}

void criterion3(Report& r) {
    const Ring Z4 = Ring::zm(4);
    const Code C(Z4, 3, {ints(Z4, {1, 1, 0}), ints(Z4, {3, 2, 1})});
    const Support lee = Support::lee(Z4, 3);
    const WeightProfile oracle = gen_weights_oracle(C, lee, true);
    const WeightProfile betti = weights_from_betti(C, lee, 0, true);
    r.expect(oracle.d == std::vector<std::uint64_t>{4, 6}, "oracle d=" + join(oracle.d));
    r.expect(betti.d == std::vector<std::uint64_t>{2, 3}, "Betti shifts " + join(betti.d));
    const int code = cli_exit({"weights", "--method", "all", "--unchecked", fixture("lee-z4")});
    r.expect(code == cli::kExitMismatch, "CLI exit " + std::to_string(code));
    r.note = "oracle (4,6), Betti shifts (2,3), CLI exit 4";
}

void criterion4(Report& r) {
    const Ring F = Ring::field(2);
    const Support s = Support::table(F, 2, {{0, 0}, {0, 1}, {1, 1}, {1, 1}});
    r.expect(is_support(s).holds, "is_support false");
    const ModularCheck m = is_modular(s);
    r.expect(!m.holds && m.witness.has_value(), "no modularity witness");
    if (m.witness) {
        // The witness must admit no reducing scalar.
        const auto& w = *m.witness;
        const std::uint32_t sv = s.evaluate(w.v)[w.i];
        bool reducible = false;
        for (std::uint32_t c = 0; c < 2; ++c) {
            Vector diff = w.v;
            for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = F.sub(diff[k], F.mul({c}, w.w[k]));
            reducible = reducible || s.evaluate(diff)[w.i] < sv;
        }
        r.expect(sv != 0 && s.evaluate(w.w)[w.i] != 0 && !reducible, "witness does not certify failure");
    }
    const Code full = Code::full_space(F, 2);
    const BettiTable t = betti_numbers(ideal_of_code(full, s).ideal);
    r.expect(t.projective_dimension == 1, "pd=" + std::to_string(t.projective_dimension));
    r.expect(big_M(full) == 2, "M=" + std::to_string(big_M(full)));
    const int code = cli_exit({"weights", "--method", "all", "--unchecked", fixture("expato")});
    r.expect(code == cli::kExitMismatch, "CLI exit " + std::to_string(code));
    r.note = "support, not modular, pd=1 < M=2, CLI exit 4";
}

void criterion5(Report& r) {
    const Ring Z4 = Ring::zm(4), Z6 = Ring::zm(6);
    r.expect(is_modular(Support::chain(Z4, 1, {{Z4.from_int(2)}})).holds, "Z4 full chain not modular");
    r.expect(!is_modular(Support::chain(Z4, 1, {})).holds, "Z4 two-term chain modular");
    r.expect(!is_modular(Support::chain(Z6, 1, {{Z6.from_int(2)}})).holds, "Z6 chain modular");
    r.note = "Z4 full: modular; Z4 two-term, Z6: not modular";
}

void criterion6(Report& r) {
    const Ring R = Ring::zm(6);
    const Code D(R, 2, {ints(R, {2, 3})});
    const auto mu = mu_components(D);
    r.expect(*std::max_element(mu.begin(), mu.end()) == 1, "mu != 1");
    r.expect(big_M(D) == 2, "M=" + std::to_string(big_M(D)));
    const MaxMinGenset g = max_min_genset_size(D);
    r.expect(g.size == 2, "max_min_genset_size=" + std::to_string(g.size));
    auto unit_multiple = [&](const Vector& v, const Vector& base) {
        for (std::uint32_t u = 0; u < 6; ++u) {
            if (!R.is_unit({u})) continue;
            if (R.mul({u}, base[0]) == v[0] && R.mul({u}, base[1]) == v[1]) return true;
        }
        return false;
    };
    bool a = false, b = false;
    for (const Vector& v : g.witness) {
        a = a || unit_multiple(v, ints(R, {2, 0}));
        b = b || unit_multiple(v, ints(R, {0, 3}));
    }
    r.expect(g.witness.size() == 2 && a && b, "witness is not a unit-multiple pair of (2,0),(0,3)");
    r.note = "mu=1 M=2 genset 2";
}

void criterion7(Report& r) {
    FILE* pipe = popen((std::string(MODSUPP_PROPERTY_SUITE) + " --gtest_brief=1 2>&1").c_str(), "r");
    if (pipe == nullptr) {
        r.expect(false, "cannot start the property suite");
        return;
    }
    std::string output;
    char buffer[4096];
    while (const std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, got);
    const int status = pclose(pipe);
    const bool ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
    r.expect(ok, "property suite failed:\n" + output);
    r.note = "property suite clean";
}

void criterion8(Report& r) {
    const MaximalEstimate e = estimate_maximal(4, 3, 2);
    r.expect(e.numerator == 153 && e.denominator == 693, "formula " + e.numerator.get_str() + "/" + e.denominator.get_str());
    std::ostringstream note;
    note << "153/693;";
    for (const auto& [q, n, k] : std::vector<std::array<std::uint64_t, 3>>{{3, 3, 2}, {4, 3, 2}, {5, 2, 2}}) {
        const double f = std::clamp(estimate_maximal(q, n, k).value.get_d(), 0.0, 1.0);
        const double sigma = std::sqrt(f * (1 - f) / static_cast<double>(kMonteCarloSamples));
        const MonteCarloResult mc = monte_carlo_maximal(q, n, k, kMonteCarloSamples, 1);
        r.expect(mc.proportion() >= f - kSigmaBand * sigma, "MC below bound at (" + std::to_string(q) + "," + std::to_string(n) + "," + std::to_string(k) + ")");
        note << " (" << q << "," << n << "," << k << ") " << mc.proportion() << ">=" << f;
    }
    r.note = note.str();
}

void criterion9(Report& r) {
    const Ring F = Ring::field(2);
    const Code zero(F, 3, {});
    const Support h = Support::hamming(F, 3);
    r.expect(throws<HypothesisError>([&] { (void)min_weight(zero, h); }), "zero code min_weight");
    r.expect(throws<HypothesisError>([&] { (void)gen_weights_fast(zero, h); }), "zero code fast");
    r.expect(throws<HypothesisError>([&] { (void)gen_weights_oracle(zero, h); }), "zero code oracle");
    r.expect(throws<HypothesisError>([&] { (void)weights_from_betti(zero, h); }), "zero code betti");
    r.expect(throws<ValidationError>([&] { (void)estimate_maximal(2, 3, 1); }), "q=2, k=1 estimate");
    Limits tight;
    tight.enumeration = 10;
    r.expect(throws<CapExceeded>([&] { (void)Code::full_space(Ring::zm(9), 3, tight).size(); }), "enumeration cap");
    Limits taylor;
    taylor.taylor_generators = 2;
    r.expect(throws<CapExceeded>([&] { (void)betti_numbers(MonomialIdeal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 0, taylor); }), "taylor cap");
    r.expect(cli_exit({"invariants", fixture("z6-example"), "--caps", "enumeration=10"}) == cli::kExitCap, "CLI cap exit");
    const Ring Z4 = Ring::zm(4);
    const Code C(Z4, 3, {ints(Z4, {1, 1, 0}), ints(Z4, {3, 2, 1})});
    const Support lee = Support::lee(Z4, 3);
    r.expect(throws<HypothesisError>([&] { (void)gen_weights_fast(C, lee); }), "non-support fast");
    r.expect(throws<HypothesisError>([&] { (void)gen_weights_oracle(C, lee); }), "non-support oracle");
    r.expect(throws<HypothesisError>([&] { (void)weights_from_betti(C, lee); }), "non-support betti");
    r.expect(cli_exit({"weights", fixture("lee-z4")}) == cli::kExitInput, "CLI non-support exit");
    r.note = "zero code, q=2/k=1, caps, non-support all rejected";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        double budget;  // seconds; 0 = no timing requirement
        std::function<void(Report&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, kExampleSeconds, criterion1}, {2, kExampleSeconds, criterion2}, {3, 0, criterion3},
        {4, 0, criterion4},               {5, 0, criterion5},               {6, 0, criterion6},
        {7, kPropertySeconds, criterion7}, {8, kEstimateSeconds, criterion8}, {9, 0, criterion9},
    };
    int hard_failures = 0;
    for (const Criterion& c : criteria) {
        Report r;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(r);
        } catch (const std::exception& e) {
            r.failures.push_back(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget > 0 && seconds >= c.budget) r.failures.push_back("took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget) + " s");
        const bool pass = r.failures.empty() && r.unattainable.empty();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", seconds);
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " [" << timing << "] ";
        if (pass) {
            std::cout << r.note;
        } else {
            std::string sep;
            for (const auto& f : r.failures) {
                std::cout << sep << f;
                sep = "; ";
            }
            for (const auto& f : r.unattainable) {
                std::cout << sep << "documented unattainable: " << f;
                sep = "; ";
            }
            if (r.failures.empty()) std::cout << "; everything else matches: " << r.note;
        }
        std::cout << '\n';
        if (!r.failures.empty()) ++hard_failures;
    }
    return hard_failures == 0 ? 0 : 1;
}
