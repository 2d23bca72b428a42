#pragma once

#include <ostream>

namespace ushape {

// Entry point of the ushape tool, with the streams injectable for tests.
// Returns 0 on success, 1 on a validation failure, 2 on a usage error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ushape
