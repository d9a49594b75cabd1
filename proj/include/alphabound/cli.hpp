#ifndef alphabound_cli_hpp
#define alphabound_cli_hpp

#include <iosfwd>
#include <string>
#include <vector>

namespace alphabound {

// Runs one CLI invocation (gen / bound / solve / verify / fuzz) against the
// given streams. Exit codes: 0 success or verified, 1 property violation,
// 2 usage or parse error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alphabound

#endif
