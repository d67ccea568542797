#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conekit {

// Runs one command line (without the program name). Exit codes: 0 success,
// 2 unknown command or invalid parameter, 1 computation or I/O failure.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct VerifyCheck {
    std::string module;
    std::string name;
    bool passed = false;
    std::string detail;
};
// Quick self-checks behind "verify"; module "all" runs every group.
std::vector<VerifyCheck> run_verify(const std::string& module);

} // namespace conekit
