#pragma once

#include <iosfwd>

namespace kplab::cli {

/// Runs the kplab command line. Exit status: 0 when every requested check
/// passed, 1 on a failed check (or an inconclusive one under --strict),
/// 2 on a usage or configuration error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kplab::cli
