#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stalg::cli {

// Exit codes shared by every subcommand. prove maps its verdict onto the
// first five; equiv and oracle-check use 0 and 1 as yes and no.
enum Exit : int {
  kOk = 0,
  kNo = 1,
  kUsage = 2,
  kContingent = 3,
  kUnsatisfiable = 4,
};

int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

// argv[0] is supplied internally.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace stalg::cli
