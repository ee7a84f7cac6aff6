// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Bounds are the full ones, not smoke-test sizes.

#include "hookforge/identity.hpp"
#include "hookforge/tableaux.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

using namespace hookforge;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void absorb(const VerificationReport& r) {
        if (passed && !r.passed) {
            passed = false;
            detail = r.check + " " + r.witness.value_or("");
        }
    }
    void require(bool ok, const std::string& why) {
        if (passed && !ok) {
            passed = false;
            detail = why;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;  // 0 means no runtime bound
    std::function<Outcome()> run;
};

Outcome theorem1prime_to_20() {
    Outcome o;
    for (int n = 0; n <= 20; ++n) o.absorb(verify_theorem1prime(n));
    return o;
}

Outcome theorem1_to_12() {
    Outcome o;
    o.absorb(verify_theorem1(12));
    return o;
}

Outcome lemma1_to_16() {
    Outcome o;
    std::size_t shapes = 0;
    for (int n = 0; n <= 16; ++n) {
        shapes += partitions_of(n).size();
        o.absorb(sweep_lemma1(n));
    }
    o.require(shapes == 915, "expected 915 shapes, saw " + std::to_string(shapes));
    return o;
}

Outcome prop3_to_60() {
    Outcome o;
    constexpr std::uint64_t seed = 0;
    for (int n = 1; n <= 60; ++n) {
        o.absorb(sweep_prop3(n, 10, seed));
        o.absorb(sweep_prop3_residues(n, 10, seed));
    }
    for (int n = 2; n <= 6; ++n) o.absorb(verify_prop3_alternating(n));
    return o;
}

Outcome prop2_to_14() {
    Outcome o;
    for (int n = 0; n <= 14; ++n) o.absorb(sweep_prop2(n));
    return o;
}

Outcome bijection_to_8() {
    Outcome o;
    for (int n = 1; n <= 8; ++n) o.absorb(verify_bijection(n));
    const auto eight = enumerate_syt(8).size();
    o.require(eight == 764, "|SYT(8)| = " + std::to_string(eight) + ", expected 764");
    for (int n = 1; n <= 9; ++n) o.absorb(verify_corner_sum(n));
    return o;
}

Outcome counting_to_12() {
    Outcome o;
    for (int n = 0; n <= 12; ++n) o.absorb(verify_counting(n));
    return o;
}

Outcome substitution_to_40() {
    Outcome o;
    for (int n = 1; n <= 40; ++n) o.absorb(verify_weight_substitution(n));
    return o;
}

Outcome corner_hooks_to_12() {
    Outcome o;
    for (int n = 0; n <= 12; ++n) o.absorb(sweep_corner_hooks(n));
    return o;
}

// Runs the CLI and captures stdout; status is the process exit code.
std::string run_cli(const std::string& args, int& status) {
    const std::string cmd = std::string("\"") + HOOKFORGE_CLI_PATH + "\" " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int raw = ::pclose(pipe);
    status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return out;
}

Outcome deterministic_json() {
    Outcome o;
    const std::string args = "verify all --max-n 10 --seed 7 --format json";
    int s1 = 0, s2 = 0;
    const std::string first = run_cli(args, s1);
    const std::string second = run_cli(args, s2);
    o.require(s1 == 0 && s2 == 0, "exit statuses " + std::to_string(s1) + " and " + std::to_string(s2));
    o.require(!first.empty() && first.front() == '[', "output is not a JSON array");
    o.require(first == second, "outputs differ (" + std::to_string(first.size()) + " vs " +
                                   std::to_string(second.size()) + " bytes)");
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "phi_n = psi_n for 0 <= n <= 20", 60, theorem1prime_to_20},
        {2, "hook-weight series in z to order 12, z=0 and z=1 specializations", 0, theorem1_to_12},
        {3, "extend/retract weight identity for all 915 shapes with |lambda| <= 16", 120, lemma1_to_16},
        {4, "parity sum, residues and alternating expansion (n <= 60, 10 samples; symbolic n <= 6)", 0, prop3_to_60},
        {5, "content sum identity for |lambda| <= 14", 0, prop2_to_14},
        {6, "row-insertion bijection for n <= 8, corner sum for n <= 9", 0, bijection_to_8},
        {7, "sum f^2 = n!, sum f = |Inv(n)| for n <= 12", 0, counting_to_12},
        {8, "weight substitution for 1 <= n <= 40", 0, substitution_to_40},
        {9, "corner hook/content relations for |lambda| <= 12", 0, corner_hooks_to_12},
        {10, "two identical JSON runs are byte-identical", 0, deterministic_json},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0) o.require(secs < c.budget_seconds, "took longer than " + std::to_string(c.budget_seconds) + " s");

        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  [" << timing << "]";
        if (!o.passed) std::cout << "\n      " << o.detail;
        std::cout << std::endl;
        failed += o.passed ? 0 : 1;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
