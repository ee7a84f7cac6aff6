#include "hookforge/runner.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace hookforge {

namespace {

constexpr std::pair<CheckSelector, std::string_view> kSelectors[] = {
    {CheckSelector::all, "all"},
    {CheckSelector::theorem1, "theorem1"},
    {CheckSelector::theorem1prime, "theorem1prime"},
    {CheckSelector::lemma1, "lemma1"},
    {CheckSelector::prop2, "prop2"},
    {CheckSelector::prop3, "prop3"},
    {CheckSelector::bijection, "bijection"},
    {CheckSelector::egf, "egf"},
    {CheckSelector::substitution, "substitution"},
};

// Largest sizes for the checks whose cost grows fastest.
constexpr int kProp2ReductionMax = 8;

using Job = std::function<VerificationReport()>;

std::vector<Job> plan(const RunConfig& c) {
    std::vector<Job> jobs;
    auto wants = [&](CheckSelector s) { return c.check == CheckSelector::all || c.check == s; };
    const int N = c.max_n;

    if (wants(CheckSelector::theorem1prime))
        for (int n = 0; n <= N; ++n) jobs.emplace_back([n] { return verify_theorem1prime(n); });
    if (wants(CheckSelector::theorem1)) {
        const int order = c.series_order;
        jobs.emplace_back([order] { return verify_theorem1(order); });
    }
    if (wants(CheckSelector::lemma1)) {
        for (int n = 0; n <= N; ++n) jobs.emplace_back([n] { return sweep_lemma1(n); });
        for (int n = 0; n <= N; ++n) jobs.emplace_back([n] { return sweep_corner_hooks(n); });
    }
    if (wants(CheckSelector::prop2)) {
        for (int n = 0; n <= N; ++n) jobs.emplace_back([n] { return sweep_prop2(n); });
        for (int n = 0; n <= std::min(N, kProp2ReductionMax); ++n) jobs.emplace_back([n] { return sweep_prop2_reduction(n); });
    }
    if (wants(CheckSelector::prop3)) {
        const int trials = c.trials;
        const auto seed = c.seed;
        for (int n = 1; n <= N; ++n) {
            jobs.emplace_back([n, trials, seed] { return sweep_prop3(n, trials, seed); });
            jobs.emplace_back([n, trials, seed] { return sweep_prop3_residues(n, trials, seed); });
        }
        for (int n = 2; n <= std::min(N, 6); ++n) jobs.emplace_back([n] { return verify_prop3_alternating(n); });
    }
    if (wants(CheckSelector::bijection)) {
        for (int n = 1; n <= N; ++n) {
            jobs.emplace_back([n] { return verify_bijection(n); });
            jobs.emplace_back([n] { return verify_corner_sum(n); });
        }
        for (int n = 0; n <= N; ++n) jobs.emplace_back([n] { return verify_counting(n); });
        for (int n = 0; n < N; ++n) jobs.emplace_back([n] { return verify_phi_recursion(n); });
    }
    if (wants(CheckSelector::egf)) {
        const int order = c.series_order;
        const auto seed = c.seed;
        for (int t = 0; t < c.trials; ++t)
            jobs.emplace_back([order, seed, t] { return verify_egf(order, seed, static_cast<std::uint64_t>(t)); });
    }
    if (wants(CheckSelector::substitution))
        for (int n = 1; n <= N; ++n) jobs.emplace_back([n] { return verify_weight_substitution(n); });
    return jobs;
}

bool report_less(const VerificationReport& a, const VerificationReport& b) {
    if (a.check != b.check) return a.check < b.check;
    return a.params < b.params;
}

std::string param_text(const ParamValue& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    return std::get<std::string>(v);
}

}  // namespace

std::optional<CheckSelector> parse_selector(std::string_view name) {
    for (const auto& [sel, text] : kSelectors)
        if (text == name) return sel;
    return std::nullopt;
}

std::string_view selector_name(CheckSelector s) {
    for (const auto& [sel, text] : kSelectors)
        if (sel == s) return text;
    return "?";
}

void validate(const RunConfig& c) {
    if (c.max_n < 1) throw std::invalid_argument("--max-n must be positive");
    if (c.series_order < 1) throw std::invalid_argument("--order must be positive");
    if (c.trials < 1) throw std::invalid_argument("--trials must be positive");
    if (c.threads < 0) throw std::invalid_argument("thread count must be nonnegative");
}

int resolve_threads(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("HOOKFORGE_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap >= 1) n = std::min<long>(n, cap);
    }
    return n;
}

std::string describe_params(const VerificationReport& r) {
    std::string s;
    for (const auto& [name, value] : r.params) {
        if (!s.empty()) s += ' ';
        s += name + "=" + param_text(value);
    }
    return s;
}

std::vector<VerificationReport> run_checks(const RunConfig& config, const ProgressFn& progress) {
    validate(config);
    const std::vector<Job> jobs = plan(config);
    std::vector<VerificationReport> reports(jobs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            const auto start = std::chrono::steady_clock::now();
            VerificationReport r;
            try {
                r = jobs[i]();
            } catch (const std::exception& e) {
                r.check = "error";
                r.fail(std::string("exception: ") + e.what());
            }
            r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            if (progress) {
                std::lock_guard lock(progress_mutex);
                progress("[" + std::to_string(++done) + "/" + std::to_string(jobs.size()) + "] " +
                         (r.passed ? "pass " : "FAIL ") + r.check + " " + describe_params(r));
            }
            reports[i] = std::move(r);
        }
    };

    const int threads = std::min<int>(resolve_threads(config.threads), static_cast<int>(std::max<std::size_t>(jobs.size(), 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::stable_sort(reports.begin(), reports.end(), report_less);
    return reports;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

std::string render_json(const std::vector<VerificationReport>& reports, bool timings) {
    using json = nlohmann::ordered_json;
    json out = json::array();
    for (const auto& r : reports) {
        json params = json::object();
        for (const auto& [name, value] : r.params) {
            if (const auto* i = std::get_if<std::int64_t>(&value))
                params[name] = *i;
            else
                params[name] = std::get<std::string>(value);
        }
        json entry = json::object();
        entry["check"] = r.check;
        entry["params"] = std::move(params);
        entry["verdict"] = r.passed ? "pass" : "fail";
        entry["witness"] = r.witness ? json(*r.witness) : json(nullptr);
        entry["millis"] = timings ? json(r.millis) : json(nullptr);
        out.push_back(std::move(entry));
    }
    return out.dump(2);
}

std::string render_text(const std::vector<VerificationReport>& reports, bool timings) {
    std::string s;
    std::size_t failed = 0;
    char buf[64];
    for (const auto& r : reports) {
        std::string line = r.passed ? "PASS  " : "FAIL  ";
        std::string check = r.check;
        check.resize(std::max<std::size_t>(check.size(), 20), ' ');
        line += check + "  " + describe_params(r);
        if (timings) {
            std::snprintf(buf, sizeof buf, "  %.1f ms", r.millis);
            line += buf;
        }
        s += line + "\n";
        if (!r.passed) {
            ++failed;
            s += "      witness: " + r.witness.value_or("") + "\n";
        }
    }
    s += std::to_string(reports.size()) + " checks, " + std::to_string(failed) + " failed\n";
    return s;
}

}  // namespace hookforge
