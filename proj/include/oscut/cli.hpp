#ifndef OSCUT_CLI_HPP
#define OSCUT_CLI_HPP

#include <iosfwd>

namespace oscut {

/// Full command-line driver, callable in-process (tests pass string streams
/// where main() passes std::cout/std::cerr). Never throws; every failure is
/// mapped to an exit code:
///   0  success
///   1  usage, flag, or input parse error
///   2  solver or output failure
///   3  a verification assertion failed (theorem or identity violated)
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace oscut

#endif  // OSCUT_CLI_HPP
