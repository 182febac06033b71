#pragma once

#include <ostream>

namespace csdp {

// Exit codes: 0 success, 1 verification failure, 2 usage/config/input error,
// 3 singular reconstruction.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace csdp
