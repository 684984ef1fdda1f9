#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grm {

// Parsed command-line configuration shared by the subcommands.
struct RunConfig {
    std::string quiver_path;
    std::string rep_name;
    std::string filtration;
    std::string weights_path;
    bool json = false;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    std::size_t max_vertices = 12;
};

// Runs the command-line front end on the given arguments (without the
// program name) and returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace grm
