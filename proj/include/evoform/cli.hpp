#pragma once

#include <iosfwd>

namespace evoform {

// Command-line front end.  Exit codes: 0 success (all verifications pass),
// 1 a verification failed, 2 parse/usage errors, 3 precondition failures
// (non-convex input, chart domain, unresolved spectrum under --strict).
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace evoform
