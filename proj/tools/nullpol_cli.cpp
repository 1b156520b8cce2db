#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "nullpol/cli.hpp"
#include "nullpol/errors.hpp"

namespace {

std::string read_input(const std::string& arg) {
  if (arg.empty()) return std::string(std::istreambuf_iterator<char>(std::cin), {});
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw nullpol::ParseError("cannot read input file '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace nullpol;
  CLI::App app{"Exact factorization of projective transformations of P3 into null polarities"};
  std::string command, input, output, format = "json", mode = "rational", action, kind;
  app.add_option("--command", command, "factorize | lift | verify | lie-contact")
      ->required()
      ->check(CLI::IsMember({"factorize", "lift", "verify", "lie-contact"}));
  app.add_option("--input", input, "input file or inline JSON (stdin when absent)");
  app.add_option("--output", output, "output file (stdout when absent)");
  app.add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--scalar-mode", mode, "rational | complex")->check(CLI::IsMember({"rational", "complex"}));
  app.add_option("--action", action, "override: points | planes")->check(CLI::IsMember({"points", "planes"}));
  app.add_option("--kind", kind, "override: collineation | correlation")
      ->check(CLI::IsMember({"collineation", "correlation"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::exit_code::parse_error;
  }

  cli::JobSpec job;
  job.command = cli::parse_command(command);
  job.format = format == "text" ? cli::OutputFormat::text : cli::OutputFormat::json;
  job.mode = mode == "complex" ? ScalarMode::complex : ScalarMode::rational;
  if (!action.empty()) job.action = klein::parse_action(action);
  if (!kind.empty()) job.kind = klein::parse_kind(kind);

  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      std::cerr << "cannot open output file '" << output << "'\n";
      return cli::exit_code::parse_error;
    }
  }
  std::ostream& out = output.empty() ? std::cout : file;

  std::vector<cli::JobReport> reports;
  bool batch = false;
  try {
    job.input = io::parse(read_input(input));
    batch = cli::is_batch(job.input);
    if (batch) {
      reports = cli::run_batch(job, job.input);
    } else {
      reports.push_back(cli::run_job(job));
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code::parse_error;
  }

  if (job.format == cli::OutputFormat::json) {
    if (batch) {
      io::json arr = io::json::array();
      for (const auto& r : reports) arr.push_back({{"status", r.status}, {"result", r.payload}});
      out << arr.dump(2) << "\n";
    } else {
      out << reports.front().payload.dump(2) << "\n";
    }
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (batch) out << "# job " << i << " (status " << reports[i].status << ")\n";
      out << reports[i].text;
    }
  }
  for (const auto& r : reports)
    if (r.status != 0 && r.payload.contains("message")) std::cerr << r.payload["message"].get<std::string>() << "\n";
  return cli::batch_status(reports);
}
