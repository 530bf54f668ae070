#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stieltjes {

// Exit codes: 0 ok, 1 usage/spec error, 2 diverged, 3 inconclusive,
// 4 evaluation at a jump, 5 a limit check graded fail.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace stieltjes
