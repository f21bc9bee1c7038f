#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "homlong/io.hpp"

namespace homlong::cli {

struct RunReport {
  std::string command;
  std::vector<std::string> inputs;
  std::vector<AxiomCheck> checks;
  std::vector<std::string> messages;
  int exit_code = 0;  // 0 all pass, 1 some check failed, 2 input or shape error
};

io::Json to_json(const RunReport& r);
RunReport report_from_json(const io::Json& j);
std::string render_text(const RunReport& r, bool verbose);

// Exit code from the checks: informational lines never fail a run.
int verdict_code(const std::vector<AxiomCheck>& checks);

// Full command line without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homlong::cli
