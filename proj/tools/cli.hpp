#pragma once

#include <iosfwd>

namespace lgamble::cli {

// Exit status: 0 success, 1 conformance failure, 2 usage/parse/IO error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lgamble::cli
