#ifndef JACK4_CLI_HPP
#define JACK4_CLI_HPP

#include <ostream>

namespace jack4 {

/// Entry point of the jack4 tool. Returns 0 on success, 1 when a verification
/// fails and 2 on a usage error (bad flags, labels or parameters).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jack4

#endif
