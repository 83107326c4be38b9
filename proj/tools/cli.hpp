#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hecke::cli {

// Runs the command line tool on args (without the program name). Results go to out;
// failures are reported on err as a JSON object and give a nonzero return value.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hecke::cli
