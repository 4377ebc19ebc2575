#pragma once

#include <iosfwd>

namespace klts {

/// Entry point of the `klts` executable. Exit codes: 0 pass, 1 property or
/// scenario failure, 2 usage or configuration error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace klts
