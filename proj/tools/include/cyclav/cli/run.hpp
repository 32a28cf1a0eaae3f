#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclav::cli {

// Exit codes: 0 success, 1 consistency failure, 2 usage or invalid input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclav::cli
