// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "algebra.hpp"
#include "dyadic.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sublat {

inline constexpr std::size_t kMaxLineLength = 250;

struct Settings {
    bool verbose = false;
    std::int64_t subtrahend = 8;
    std::string op_symbols = std::string(kDefaultOpSymbols);
};

/// One partial algebra of a batch file, i.e. one leaf of a case analysis.
struct Job {
    std::string name;
    std::size_t declared_size = 0;
    std::string elements;
    std::vector<Constraint> constraints;
    std::vector<std::string> case_labels;
    std::size_t first_line = 0;
    std::size_t last_line = 0;
    /// Settings in force at \beginjob.
    Settings settings;

    PartialAlgebra algebra() const;
};

struct Script {
    Settings settings;
    std::vector<Job> jobs;
};

struct JobResult {
    std::string job_name;
    std::size_t n = 0;
    std::int64_t subtrahend = 8;
    BigUint sub_count;
    DyadicValue sigma;
    /// Closed subsets, filled only for verbose jobs with n <= 24.
    std::vector<std::string> listing;
    bool listing_skipped = false;
};

struct VerificationSummary {
    std::size_t job_count = 0;
    DyadicValue max_sigma;
    bool all_excluded = true;
    std::vector<std::string> offenders;
};

struct RunOptions {
    /// Jobs evaluated concurrently; results always come back in input order.
    unsigned job_threads = 1;
    /// Threads used inside each count.
    unsigned count_threads = 1;
};

/// Parses the batch format. Throws Error with a line/column on bad input.
Script parse_script(std::string_view text);

/// Emits a batch file that parses back to the same jobs.
std::string render_script(const Script& script);

JobResult run_job(const Job& job, unsigned count_threads = 1);
std::vector<JobResult> run_script(const Script& script, RunOptions options = {});

/// The two report lines for one job (plus the subset listing in verbose mode).
std::string format_result(const JobResult& result, const Settings& settings);
std::string format_report(const std::vector<JobResult>& results, const Settings& settings);

/// One JSON object per line: name, n, sub_count, sigma ("m*2^e"), sigma_decimal.
std::string format_json_lines(const std::vector<JobResult>& results);

VerificationSummary summarize(const std::vector<JobResult>& results, const DyadicValue& threshold);
VerificationSummary verify_script(const Script& script, const DyadicValue& threshold = DyadicValue::from_integer(83),
                                  RunOptions options = {});
std::string format_summary(const VerificationSummary& summary, const DyadicValue& threshold);

}  // namespace sublat
