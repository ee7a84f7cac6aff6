#pragma once

#include "hookforge/identity.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hookforge {

enum class CheckSelector { all, theorem1, theorem1prime, lemma1, prop2, prop3, bijection, egf, substitution };
enum class OutputFormat { text, json };

/// Parses a selector name; std::nullopt for anything unknown.
std::optional<CheckSelector> parse_selector(std::string_view name);
std::string_view selector_name(CheckSelector s);

struct RunConfig {
    CheckSelector check = CheckSelector::all;
    int max_n = 10;
    int series_order = 10;
    int trials = 5;
    std::uint64_t seed = 0;
    /// Worker threads; 0 picks the hardware concurrency. HOOKFORGE_THREADS
    /// caps the result either way.
    int threads = 0;
    /// Record wall-clock time per check. Off by default so that reports for
    /// equal configs are byte-identical.
    bool timings = false;
};

/// Throws std::invalid_argument when a bound is not positive.
void validate(const RunConfig& config);

/// One line per finished check, called from worker threads under a lock.
using ProgressFn = std::function<void(const std::string& line)>;

/// Runs every check the selector names. Reports are sorted by check name,
/// then parameters, whatever order the workers finish in.
std::vector<VerificationReport> run_checks(const RunConfig& config, const ProgressFn& progress = {});

bool all_passed(const std::vector<VerificationReport>& reports);

/// JSON: an array of {check, params, verdict, witness, millis}. millis is
/// null unless timings were requested.
std::string render_json(const std::vector<VerificationReport>& reports, bool timings);
std::string render_text(const std::vector<VerificationReport>& reports, bool timings);

std::string describe_params(const VerificationReport& r);

/// Effective worker count for a requested thread count.
int resolve_threads(int requested);

}  // namespace hookforge
