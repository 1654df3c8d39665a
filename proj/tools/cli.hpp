#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unitlat::cli {

inline constexpr const char* kReportSchema = "unitlat.report/v1";

// Exit codes: 0 success, 1 certification failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCertification = 1;
inline constexpr int kExitUsage = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unitlat::cli
