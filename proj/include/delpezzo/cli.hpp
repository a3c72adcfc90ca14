#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace delpezzo::cli {

enum class Format { Json, Csv, Plain };

struct CliConfig {
  std::string subcommand;       // verify | roots | table | remark2
  std::vector<int> lattices;    // del Pezzo indices selected by --n
  int rank = 8;                 // remark2 only
  Format format = Format::Plain;
  std::string output;           // empty: standard output
  int jobs = 1;
};

/// Exit codes: 0 every check passed, 1 some check failed, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace delpezzo::cli
