#pragma once

#include "moh/forge.hpp"
#include "moh/groebner.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace moh {

enum class Suite { Kernel, Syzygy, Sigma, Counts, Identities, N1, Oracle, All };

std::optional<Suite> suite_from_name(std::string_view name);
std::string suite_name(Suite s);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // first concrete witness on failure; notes on pass
    double millis = 0.0;
};

struct VerificationReport {
    std::int64_t n = 0;
    std::int64_t lambda = 0;
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const;
    std::string to_text() const;
    std::string to_json_text() const;
};

/// Runs one named check bundle for (n, lambda). Checks are executed in a
/// fixed name order and none is skipped silently; suites n1 and oracle
/// require n = 1 (NotN1Error). Parameter validation errors propagate.
VerificationReport run_suite(std::int64_t n, std::int64_t lambda, Suite suite,
                             std::size_t oracle_budget = kDefaultPairBudget);

}  // namespace moh
