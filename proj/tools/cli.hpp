#pragma once

#include <iosfwd>

namespace opinex::cli {

/// Exit codes: 0 success, 1 usage error, 2 data error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace opinex::cli
