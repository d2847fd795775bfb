#ifndef LOCOL_ERRORS_HPP
#define LOCOL_ERRORS_HPP

#include <atomic>
#include <stdexcept>
#include <string>

namespace locol {

// Input file is syntactically or structurally malformed.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_number(line) {}
    int line_number;
};

// Requested palette is smaller than the computed lower bound.
struct InfeasiblePalette : std::runtime_error {
    InfeasiblePalette(int k, int gamma)
        : std::runtime_error("palette " + std::to_string(k) +
                             " is below the required bound " + std::to_string(gamma)),
          k(k), gamma(gamma) {}
    int k;
    int gamma;
};

// Instance exceeds a brute-force size guard.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::atomic<std::uint64_t>& invariant_violation_count() {
    static std::atomic<std::uint64_t> count{0};
    return count;
}

// A state the algorithms prove unreachable was reached: an implementation
// bug, never a user error. Constructions count every throw so test harnesses
// can assert none occurred.
struct InvariantViolation : std::logic_error {
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {
        invariant_violation_count().fetch_add(1, std::memory_order_relaxed);
    }
};

}  // namespace locol

#endif
