#pragma once

#include <cstdint>
#include <ostream>

namespace crossvar::cli {

enum exit_code : int {
    ok = 0,
    selftest_failed = 1,
    input_error = 2,
    algorithm_mismatch = 3,
    degenerate = 4,
};

struct BenchCell {
    std::size_t n = 0;
    double p = 0;
    double mean_m = 0;
    double general_ns = 0;
    double reuse_ns = 0;
    /// general_ns / reuse_ns
    double ratio = 0;
};

/// Mean time of the general algorithm with and without pair reuse over `graphs` G(n, p)
/// samples and `reps` repetitions each. Only the variance calls are timed.
BenchCell bench_cell(std::size_t n, double p, std::size_t graphs, std::size_t reps, std::uint64_t seed);

/// Parses argv and runs one subcommand. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace crossvar::cli
