#pragma once

#include <ostream>
#include <string>

namespace qcorr::cli {

/// Runs every invariant suite at reduced resolution and prints one
/// "[PASS]/[FAIL] suite" line each. Returns true when all pass.
///
/// `fault` selects an intentional defect: "" (none) or "lambda-branch",
/// which drops the exponential damping from the hyperbolic branch of the
/// memory envelope seen by the Kraus-completeness suite.
bool run_selftest(std::ostream& out, const std::string& fault = "");

}  // namespace qcorr::cli
