#pragma once

// Command-line front end. Every path writes one JSON document to out:
//   exit 0  result
//   exit 2  {"error": {"code": ..., "message": ...}} for invalid input or usage
//   exit 1  {"error": {"code": "IdentityViolation", ...}} when an identity that must hold fails
// --help writes plain text and exits 0.

#include <ostream>
#include <string>
#include <vector>

namespace wittstab {

int run_cli(const std::vector<std::string>& args, std::ostream& out);
int run_cli(int argc, const char* const* argv, std::ostream& out);

}  // namespace wittstab
