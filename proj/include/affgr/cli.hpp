#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace affgr::cli {

/// A validated command line. Weight literals and the type spec are checked
/// against each other during parsing; dominance and adjacency are left to the
/// library (domain errors).
struct CommandRequest {
  std::string command;
  std::optional<std::string> type;
  std::optional<std::string> lambda;
  std::optional<std::string> mu;
  std::optional<std::int64_t> ell;
  std::optional<int> n;
  std::optional<std::string> left;
  std::optional<std::string> right;
  std::optional<std::string> monomials;
  std::string format = "json";
  std::int64_t max_prime = 100;
};

const std::vector<std::string>& command_names();

/// Throws ParseError on unknown commands, missing or malformed options, rank
/// mismatches and composite --ell. Returns nullopt when help was requested
/// (the help text is written to `help`).
std::optional<CommandRequest> parse_request(const std::vector<std::string>& args, std::ostream& help);

/// {command, input, result}. Throws the library's DomainError and
/// ConsistencyError unchanged.
nlohmann::ordered_json run(const CommandRequest& request);

/// Human-readable rendering of a run() document: one "path: value" line per leaf.
std::string render_table(const nlohmann::ordered_json& doc);

/// Full command-line behaviour. Exit codes: 0 success, 2 usage error,
/// 3 domain error. Errors are written to `err` as {"error": ...}.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affgr::cli
