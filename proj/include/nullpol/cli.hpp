#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nullpol/io.hpp"

namespace nullpol::cli {

enum class Command { factorize, lift, verify, lie_contact };
enum class OutputFormat { json, text };

Command parse_command(const std::string& s);
std::string to_string(Command c);

namespace exit_code {
constexpr int ok = 0;
constexpr int verification_failed = 1;
constexpr int complex_required = 2;
constexpr int not_liftable = 3;
constexpr int parse_error = 64;
constexpr int singular = 65;
}  // namespace exit_code

struct JobSpec {
  Command command = Command::factorize;
  io::json input;
  OutputFormat format = OutputFormat::json;
  ScalarMode mode = ScalarMode::rational;
  std::optional<klein::TransformKind> kind;
  std::optional<klein::Action> action;
};

struct JobReport {
  int status = exit_code::ok;
  io::json payload;
  std::string text;
};

JobReport cmd_factorize(const JobSpec& job);
JobReport cmd_lift(const JobSpec& job);
JobReport cmd_verify(const JobSpec& job);
JobReport cmd_lie_contact(const JobSpec& job);

/// Dispatches on job.command; library errors become exit statuses and an
/// {"error": ...} payload, never exceptions.
JobReport run_job(const JobSpec& job);

/// An array whose entries are all objects with an "input" field.
bool is_batch(const io::json& input);

/// Runs every entry of a batch in parallel; entries may override "command",
/// "scalar_mode", "kind" and "action". Output order matches input order.
std::vector<JobReport> run_batch(const JobSpec& defaults, const io::json& jobs);

/// Highest status of a batch (0 when empty).
int batch_status(const std::vector<JobReport>& reports);

}  // namespace nullpol::cli
