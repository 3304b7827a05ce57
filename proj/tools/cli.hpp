#pragma once

#include <iosfwd>

namespace desattack::cli {

/// Exit codes: 0 success (verify: robust), 2 verify found a stealthy
/// effective attack, 1 on any error.
int cli_main( int argc, const char* const* argv, std::ostream& out, std::ostream& err );

} // namespace desattack::cli
