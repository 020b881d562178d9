#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace hyperspec::cli {

using Json = nlohmann::ordered_json;

struct CommandReport {
  std::string command;
  std::string digest;  // FNV-1a of the input bytes, hex
  Json payload = Json::object();
  std::vector<std::string> warnings;
  int exit_code = 0;

  Json to_json() const;
  static CommandReport from_json(const Json& j);
  friend bool operator==(const CommandReport&, const CommandReport&) = default;
};

std::string fnv1a_hex(std::string_view bytes);

// Parses the argument list (without the program name) and runs one command.
// Never throws; failures become exit codes 1, 2 or 3 in the report.
CommandReport execute(const std::vector<std::string>& args);

// Human-readable rendering of a report.
std::string render_text(const CommandReport& report);

// Full front end: execute, print to out (text or --json), return exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperspec::cli
