// hookforge command-line driver. Talks to the library only through the C API.
//
//   hookforge verify <check> [--max-n N] [--order N] [--trials N] [--seed S]
//                            [--format text|json] [--out PATH] [--timings]
//   hookforge compute <phi|psi|rho|weight|flambda|hooks> <arg>
//
// Exit status: 0 when every check passed, 1 on any identity failure, 2 on a
// usage error.

#include "hookforge/hookforge.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct VerifyOptions {
    std::string check = "all";
    int64_t max_n = 10;
    int64_t order = 10;
    int64_t trials = 5;
    uint64_t seed = 0;
    int64_t threads = 0;
    std::string format = "text";
    std::string out_path;
    bool timings = false;
    bool quiet = false;
};

struct ComputeOptions {
    std::string what;
    std::string arg;
};

void print_progress(const char* line, void*) { std::cerr << line << '\n'; }

int report_error(hf_status status) {
    std::cerr << "hookforge: " << hf_status_name(status) << ": " << hf_last_error() << '\n';
    return status == HF_ERR_INVALID_ARGUMENT || status == HF_ERR_UNKNOWN_CHECK ? kExitUsage : kExitFail;
}

int run_verify(const VerifyOptions& opt) {
    hf_config* config = nullptr;
    hf_status st = hf_config_create(&config);
    if (st != HF_OK) return report_error(st);
    struct Guard {
        hf_config* c;
        ~Guard() { hf_config_destroy(c); }
    } guard{config};

    if ((st = hf_config_set_check(config, opt.check.c_str())) != HF_OK ||
        (st = hf_config_set_max_n(config, opt.max_n)) != HF_OK ||
        (st = hf_config_set_order(config, opt.order)) != HF_OK ||
        (st = hf_config_set_trials(config, opt.trials)) != HF_OK ||
        (st = hf_config_set_seed(config, opt.seed)) != HF_OK ||
        (st = hf_config_set_threads(config, opt.threads)) != HF_OK ||
        (st = hf_config_set_timings(config, opt.timings ? 1 : 0)) != HF_OK)
        return report_error(st);
    if (!opt.quiet) hf_config_set_progress(config, print_progress, nullptr);

    hf_report_set* reports = nullptr;
    if ((st = hf_run(config, &reports)) != HF_OK) return report_error(st);
    const size_t failures = hf_report_failures(reports);

    const char* rendered = nullptr;
    st = hf_report_render(reports, opt.format == "json" ? HF_FORMAT_JSON : HF_FORMAT_TEXT, &rendered);
    if (st != HF_OK) {
        hf_report_set_destroy(reports);
        return report_error(st);
    }
    std::string text = rendered;
    hf_report_set_destroy(reports);
    if (opt.format == "json") text += '\n';

    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_path, std::ios::binary);
        out << text;
        if (!out) {
            std::cerr << "hookforge: cannot write " << opt.out_path << '\n';
            return kExitFail;
        }
    }
    return failures == 0 ? kExitPass : kExitFail;
}

int run_compute(const ComputeOptions& opt) {
    char* result = nullptr;
    hf_status st = HF_OK;
    auto as_int = [&](int& v) {
        try {
            std::size_t used = 0;
            v = std::stoi(opt.arg, &used);
            return used == opt.arg.size();
        } catch (const std::exception&) {
            return false;
        }
    };
    int n = 0;
    if (opt.what == "phi" || opt.what == "psi" || opt.what == "rho") {
        if (!as_int(n)) {
            std::cerr << "hookforge: " << opt.what << " expects an integer\n";
            return kExitUsage;
        }
        st = opt.what == "phi" ? hf_phi(n, &result) : opt.what == "psi" ? hf_psi(n, &result) : hf_rho(n, &result);
    } else if (opt.what == "weight") {
        st = hf_weight(opt.arg.c_str(), &result);
    } else if (opt.what == "flambda") {
        st = hf_f_lambda(opt.arg.c_str(), &result);
    } else {
        st = hf_hooks(opt.arg.c_str(), &result);
    }
    if (st != HF_OK) {
        std::cerr << "hookforge: " << hf_status_name(st) << ": " << hf_last_error() << '\n';
        return kExitUsage;
    }
    std::cout << result << '\n';
    hf_string_free(result);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of hook-length expansion identities"};
    app.require_subcommand(1);

    VerifyOptions verify;
    auto* cmd_verify = app.add_subcommand("verify", "Run verification sweeps");
    cmd_verify->add_option("check", verify.check, "Which identity to check")
        ->check(CLI::IsMember({"all", "theorem1", "theorem1prime", "lemma1", "prop2", "prop3", "bijection", "egf",
                               "substitution"}));
    cmd_verify->add_option("--max-n", verify.max_n, "Largest size n swept")->check(CLI::PositiveNumber);
    cmd_verify->add_option("--order", verify.order, "Series truncation order")->check(CLI::PositiveNumber);
    cmd_verify->add_option("--trials", verify.trials, "Random samples per size")->check(CLI::PositiveNumber);
    cmd_verify->add_option("--seed", verify.seed, "Seed for sampled checks");
    cmd_verify->add_option("--threads", verify.threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--format", verify.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    cmd_verify->add_option("--out", verify.out_path, "Write the report here instead of stdout");
    cmd_verify->add_flag("--timings", verify.timings, "Include per-check wall-clock times");
    cmd_verify->add_flag("-q,--quiet", verify.quiet, "No progress on stderr");

    ComputeOptions compute;
    auto* cmd_compute = app.add_subcommand("compute", "Print one exact quantity");
    cmd_compute->add_option("what", compute.what, "phi | psi | rho | weight | flambda | hooks")
        ->required()
        ->check(CLI::IsMember({"phi", "psi", "rho", "weight", "flambda", "hooks"}));
    cmd_compute->add_option("arg", compute.arg, "n, or a partition such as 3,1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    if (cmd_verify->parsed()) return run_verify(verify);
    return run_compute(compute);
}
