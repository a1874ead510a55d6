#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace updom {

// Batch front end: reads graph6 or edge-list instances, emits deterministic
// JSON on `out`. Returns 0 on success, 2 on a precondition refusal (bad input,
// instance over the brute-force cap, unmet algorithm precondition) and 1 on an
// internal invariant breach. Kept as a library function so the tests can run
// it in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace updom
