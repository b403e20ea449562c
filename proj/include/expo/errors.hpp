#ifndef EXPO_ERRORS_HPP
#define EXPO_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace expo {

// Raised when parsing user-supplied files or names fails. CLI exit code 1.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exact operation would have to enumerate past the cap.
struct EnumerationCapExceeded : std::runtime_error {
  explicit EnumerationCapExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

// Raised when an exposure has zero probability for some unit. CLI exit code 2.
struct PositivityViolation : std::runtime_error {
  PositivityViolation(int label, std::vector<int> zero_units_in)
      : std::runtime_error("positivity violated for exposure " +
                           std::to_string(label)),
        label(label),
        zero_units(std::move(zero_units_in)) {}
  int label;
  std::vector<int> zero_units;  // 0-based unit indices with pi_i(d) == 0
};

// The unbiased Horvitz-Thompson variance estimator refuses to run when any
// joint exposure probability is zero; callers are pointed at the
// conservative estimator instead of getting a silently deflated number.
struct ZeroJointRefusal : std::runtime_error {
  ZeroJointRefusal(int label, std::vector<std::pair<int, int>> pairs_in)
      : std::runtime_error("joint exposure probability is zero for " +
                           std::to_string(pairs_in.size()) +
                           " pair(s); use the conservative estimator"),
        label(label),
        zero_pairs(std::move(pairs_in)) {}
  int label;
  std::vector<std::pair<int, int>> zero_pairs;
};

// Raised by operations whose output is undefined unless NURVA holds.
struct AssumptionViolated : std::runtime_error {
  explicit AssumptionViolated(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace expo

#endif  // EXPO_ERRORS_HPP
