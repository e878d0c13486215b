#pragma once

#include <iosfwd>

namespace sl2relax::cli {

// Full CLI entry point with redirectable streams so tests can drive it
// in-process. Returns the process exit code: 0 success, 1 usage error,
// 2 domain error, 3 numeric failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sl2relax::cli
