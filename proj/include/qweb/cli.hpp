// Command-line front end. run() never exits the process; it returns the
// exit code and writes reports to the given streams.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qweb::cli {

enum Exit : int {
  Ok = 0,
  Failure = 1,  // other errors
  ParseError = 2,
  VerifyFailed = 3,
  CapExceeded = 4,
};

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qweb::cli
