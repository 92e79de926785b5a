#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace corona::verify {

/// Outcome of a single verification instance.
///
/// `match` / `mismatch` report an executed comparison. `hypothesis_violated`
/// records an instance that a formula's preconditions exclude, where the
/// implementation correctly refused; `skipped` records an instance a suite
/// deliberately does not evaluate (e.g. no closed form targets it, or it
/// exceeds an oracle's size cap). Only `mismatch` is a failure.
enum class Verdict { match, mismatch, hypothesis_violated, skipped };

std::string_view verdict_name(Verdict v);

/// Parameters of a verification sweep. The same config always enumerates the
/// same instances in the same order, independent of thread count.
struct SweepConfig {
    std::uint64_t seed = 1;
    int trials = 25;
    int max_vertices = 8;
    double min_density = 0.15;
    double max_density = 0.85;
    /// Suites to run; empty means every suite except the negative
    /// self-test fixture.
    std::vector<std::string> suites;
    /// Worker threads; 0 picks a hardware default. The environment variable
    /// CORONA_SPECTRA_THREADS, when set, caps the final value.
    int threads = 0;
};

struct Report {
    std::string suite;
    std::string instance;
    std::string expected;
    std::string actual;
    Verdict verdict = Verdict::skipped;
    double seconds = 0.0;
};

struct SweepSummary {
    std::vector<Report> reports;
    int matches = 0;
    int mismatches = 0;
    int hypothesis_violations = 0;
    int skips = 0;

    bool ok() const { return mismatches == 0; }
};

/// Suites runnable by name. Excludes the negative self-test fixture, which
/// must be requested explicitly.
std::vector<std::string> suite_names();

/// All suite names including the negative self-test fixture.
std::vector<std::string> all_suite_names();

/// Runs the configured suites and tallies verdicts. Reports appear in
/// deterministic instance order. Throws std::invalid_argument for unknown
/// suite names.
SweepSummary run_sweep(const SweepConfig& config);

/// Product-operation labels ("op/direction/matrix") that the sweep suites
/// check against an independent oracle.
std::vector<std::string> covered_operations();

/// Product-operation labels that must be covered: every corona operation and
/// direction crossed with every matrix kind.
std::vector<std::string> required_operations();

}  // namespace corona::verify
