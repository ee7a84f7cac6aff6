#include "hookforge/hookforge.h"

#include "hookforge/involutions.hpp"
#include "hookforge/runner.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

struct hf_config {
    hookforge::RunConfig config;
    hf_progress_fn progress = nullptr;
    void* progress_user = nullptr;
};

struct hf_report_set {
    std::vector<hookforge::VerificationReport> reports;
    bool timings = false;
    std::string rendered;
};

namespace {

thread_local std::string last_error;

hf_status fail(hf_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
hf_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const std::bad_alloc&) {
        return fail(HF_ERR_INTERNAL, "out of memory");
    } catch (const hookforge::ArithmeticError& e) {
        return fail(HF_ERR_ARITHMETIC, e.what());
    } catch (const std::out_of_range& e) {
        return fail(HF_ERR_OUT_OF_RANGE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(HF_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(HF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(HF_ERR_INTERNAL, "unknown exception");
    }
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hf_status set_bounded(hf_config* config, int64_t value, int hookforge::RunConfig::*field, const char* name) {
    if (!config) return fail(HF_ERR_NULL_ARGUMENT, "config is null");
    if (value < 1 || value > 1'000'000) return fail(HF_ERR_INVALID_ARGUMENT, std::string(name) + " must lie in 1..1000000");
    config->config.*field = static_cast<int>(value);
    return HF_OK;
}

template <class F>
hf_status compute_string(char** out, F&& body) {
    if (!out) return fail(HF_ERR_NULL_ARGUMENT, "out is null");
    *out = nullptr;
    return guarded([&] {
        *out = duplicate(body());
        return HF_OK;
    });
}

hookforge::Partition parse_partition(const char* text) {
    if (!text) throw std::invalid_argument("partition is null");
    return hookforge::Partition::parse(text);
}

}  // namespace

extern "C" {

const char* hf_version(void) { return "0.1.0"; }

const char* hf_last_error(void) { return last_error.c_str(); }

const char* hf_status_name(hf_status status) {
    switch (status) {
        case HF_OK: return "ok";
        case HF_ERR_NULL_ARGUMENT: return "null argument";
        case HF_ERR_INVALID_ARGUMENT: return "invalid argument";
        case HF_ERR_UNKNOWN_CHECK: return "unknown check";
        case HF_ERR_OUT_OF_RANGE: return "out of range";
        case HF_ERR_ARITHMETIC: return "arithmetic error";
        case HF_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void hf_string_free(char* s) { std::free(s); }

hf_status hf_config_create(hf_config** out) {
    if (!out) return fail(HF_ERR_NULL_ARGUMENT, "out is null");
    return guarded([&] {
        *out = new hf_config();
        return HF_OK;
    });
}

void hf_config_destroy(hf_config* config) { delete config; }

hf_status hf_config_set_check(hf_config* config, const char* selector) {
    if (!config || !selector) return fail(HF_ERR_NULL_ARGUMENT, "config or selector is null");
    const auto parsed = hookforge::parse_selector(selector);
    if (!parsed) return fail(HF_ERR_UNKNOWN_CHECK, std::string("unknown check '") + selector + "'");
    config->config.check = *parsed;
    return HF_OK;
}

hf_status hf_config_set_max_n(hf_config* config, int64_t max_n) {
    return set_bounded(config, max_n, &hookforge::RunConfig::max_n, "max_n");
}

hf_status hf_config_set_order(hf_config* config, int64_t order) {
    return set_bounded(config, order, &hookforge::RunConfig::series_order, "order");
}

hf_status hf_config_set_trials(hf_config* config, int64_t trials) {
    return set_bounded(config, trials, &hookforge::RunConfig::trials, "trials");
}

hf_status hf_config_set_seed(hf_config* config, uint64_t seed) {
    if (!config) return fail(HF_ERR_NULL_ARGUMENT, "config is null");
    config->config.seed = seed;
    return HF_OK;
}

hf_status hf_config_set_threads(hf_config* config, int64_t threads) {
    if (!config) return fail(HF_ERR_NULL_ARGUMENT, "config is null");
    if (threads < 0 || threads > 4096) return fail(HF_ERR_INVALID_ARGUMENT, "threads must lie in 0..4096");
    config->config.threads = static_cast<int>(threads);
    return HF_OK;
}

hf_status hf_config_set_timings(hf_config* config, int enabled) {
    if (!config) return fail(HF_ERR_NULL_ARGUMENT, "config is null");
    config->config.timings = enabled != 0;
    return HF_OK;
}

hf_status hf_config_set_progress(hf_config* config, hf_progress_fn fn, void* user) {
    if (!config) return fail(HF_ERR_NULL_ARGUMENT, "config is null");
    config->progress = fn;
    config->progress_user = user;
    return HF_OK;
}

hf_status hf_run(const hf_config* config, hf_report_set** out) {
    if (!config || !out) return fail(HF_ERR_NULL_ARGUMENT, "config or out is null");
    *out = nullptr;
    return guarded([&] {
        hookforge::ProgressFn progress;
        if (config->progress) {
            progress = [fn = config->progress, user = config->progress_user](const std::string& line) {
                fn(line.c_str(), user);
            };
        }
        auto set = std::make_unique<hf_report_set>();
        set->reports = hookforge::run_checks(config->config, progress);
        set->timings = config->config.timings;
        *out = set.release();
        return HF_OK;
    });
}

void hf_report_set_destroy(hf_report_set* reports) { delete reports; }

size_t hf_report_count(const hf_report_set* reports) { return reports ? reports->reports.size() : 0; }

size_t hf_report_failures(const hf_report_set* reports) {
    if (!reports) return 0;
    size_t n = 0;
    for (const auto& r : reports->reports) n += r.passed ? 0 : 1;
    return n;
}

hf_status hf_report_get(const hf_report_set* reports, size_t index, const char** check, int* passed,
                        const char** witness) {
    if (!reports) return fail(HF_ERR_NULL_ARGUMENT, "reports is null");
    if (index >= reports->reports.size()) return fail(HF_ERR_OUT_OF_RANGE, "report index out of range");
    const auto& r = reports->reports[index];
    if (check) *check = r.check.c_str();
    if (passed) *passed = r.passed ? 1 : 0;
    if (witness) *witness = r.witness ? r.witness->c_str() : nullptr;
    return HF_OK;
}

hf_status hf_report_render(hf_report_set* reports, hf_format format, const char** out) {
    if (!reports || !out) return fail(HF_ERR_NULL_ARGUMENT, "reports or out is null");
    return guarded([&] {
        switch (format) {
            case HF_FORMAT_TEXT: reports->rendered = hookforge::render_text(reports->reports, reports->timings); break;
            case HF_FORMAT_JSON: reports->rendered = hookforge::render_json(reports->reports, reports->timings); break;
            default: return fail(HF_ERR_INVALID_ARGUMENT, "unknown format");
        }
        *out = reports->rendered.c_str();
        return HF_OK;
    });
}

hf_status hf_phi(int n, char** out) {
    return compute_string(out, [&] { return hookforge::phi_n(n).to_string("q"); });
}

hf_status hf_psi(int n, char** out) {
    return compute_string(out, [&] { return hookforge::psi_n(n).to_string("q"); });
}

hf_status hf_rho(int n, char** out) {
    return compute_string(out, [&] { return hookforge::rho(n).to_string("z"); });
}

hf_status hf_weight(const char* partition, char** out) {
    return compute_string(out, [&] { return hookforge::weight_lambda(parse_partition(partition)).to_string("q"); });
}

hf_status hf_f_lambda(const char* partition, char** out) {
    return compute_string(out, [&] { return hookforge::f_lambda(parse_partition(partition)).get_str(); });
}

hf_status hf_hooks(const char* partition, char** out) {
    return compute_string(out, [&] {
        const auto shape = parse_partition(partition);
        const auto hooks = hookforge::hook_lengths(shape);
        std::string s;
        std::size_t at = 0;
        for (int row = 1; row <= shape.length(); ++row) {
            if (row > 1) s += '/';
            for (int col = 1; col <= shape.row_length(row); ++col) {
                if (col > 1) s += ' ';
                s += std::to_string(hooks[at++]);
            }
        }
        return shape.empty() ? std::string("-") : s;
    });
}

}  // extern "C"
