#pragma once

#include <string>
#include <vector>

namespace lrlens {

// Exit codes: 0 success, 2 config error, 3 numerical abort, 4 missing inputs,
// 1 anything else.
int run_cli(const std::vector<std::string>& args);

} // namespace lrlens
