#ifndef MAGICLAB_TOOLS_CLI_HH
#define MAGICLAB_TOOLS_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace magiclab::cli
{
    constexpr int exit_ok = 0;
    constexpr int exit_input_error = 2;
    constexpr int exit_indeterminate = 3;

    /// Runs one invocation. argv[0] is the program name.
    auto run(int argc, const char * const argv[], std::ostream & out, std::ostream & err) -> int;

    /// Same, with the arguments after the program name.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
