#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bignum.hpp"

namespace recurselab {

// A named verification suite: a batch of exact checks of the library against
// independent closed forms, recurrences, or brute-force expansion.
struct SuiteResult {
  std::string suite;
  bool ok = false;
  std::uint64_t checked = 0;  // number of individual checks performed
  std::string witness;        // first failure, empty when ok
};

struct VerifyOptions {
  std::optional<std::pair<std::int64_t, std::int64_t>> range;  // suite-specific
  BigNat fuel = 1000000;
  std::int64_t order = 16;  // series truncation order
};

// Known suites: lemma1, theorem1, theorem3, theorem4, lemma4, gf, bounds,
// kclosed, vclosed.
std::vector<std::string> verify_suite_names();

// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_verify_suite(const std::string& name,
                             const VerifyOptions& options = {});

}  // namespace recurselab
