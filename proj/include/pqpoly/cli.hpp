#ifndef PQPOLY_CLI_HPP
#define PQPOLY_CLI_HPP

#include <ostream>

namespace pqpoly {

/// Exit codes: 0 success, 1 a verification cell failed (or a suite was
/// vacuous), 2 invalid configuration.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pqpoly

#endif  // PQPOLY_CLI_HPP
