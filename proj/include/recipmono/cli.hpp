#ifndef RECIPMONO_CLI_HPP
#define RECIPMONO_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace recipmono {

inline constexpr const char* kToolVersion = "1.0.0";

/* Entry point of the recipmono command line, without the program name in
 * `args`.  Reports go to `out`; errors go to `err` as a JSON object.
 * Returns 0 on success, 1 on domain errors, 2 on usage errors. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace recipmono

#endif
