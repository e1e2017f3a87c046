#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crossvar {

/// Malformed textual input (edge lists, layout tables, arrangements).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit parse_error(const std::string& what) : std::runtime_error(what), line_(0) {}

    /// 1-based line number, 0 when not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A file could not be opened or read.
class io_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a semantic rule (self-loop, bad table).
class validation_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition.
class contract_violation : public std::logic_error {
    using std::logic_error::logic_error;
};

/// A brute-force routine was asked to do more work than its configured budget.
class oracle_limit_exceeded : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The requested algorithm does not apply to this input.
class unsupported_algorithm : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class not_a_forest : public unsupported_algorithm {
    using unsupported_algorithm::unsupported_algorithm;
};

/// Statistic undefined because Var[C] = 0 (z-score, tail bounds).
class degenerate_statistic : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal identity failed; always a bug in this library.
class internal_inconsistency : public std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace crossvar
