#include "nullpol/cli.hpp"

#include <algorithm>
#include <sstream>

#include "nullpol/errors.hpp"
#include "nullpol/kernels.hpp"

namespace nullpol::cli {
namespace {

using io::json;

klein::ProjTransform4 transform_of(const JobSpec& job) {
  return io::transform_from_json(job.input, job.kind, job.action);
}

JobReport failure(int status, const std::string& kind, const std::string& message) {
  JobReport r;
  r.status = status;
  r.payload = {{"error", kind}, {"message", message}};
  r.text = "error: " + kind + ": " + message + "\n";
  return r;
}

std::string chain_text(const klein::FactorizationResult& r) {
  std::ostringstream os;
  const std::size_t n = r.polarities.size();
  os << "factors: " << r.factors.size() << "\n";
  for (std::size_t i = 0; i < r.factors.size(); ++i) os << "  v" << n - i << " = " << r.factors[i].str() << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = r.polarities[i];
    os << "M" << n - i << (p.action == klein::Action::points ? "* (points)" : " (planes)") << ":\n"
       << io::matrix_text(p.matrix, "  ");
  }
  os << "scale: " << r.scale << "\nverified: " << (r.verified ? "true" : "false") << "\n";
  return os.str();
}

std::pair<lie::LieElement, lie::LieElement> element_pair(const json& in) {
  if (in.is_array() && in.size() == 2) return {io::lie_element_from_json(in[0]), io::lie_element_from_json(in[1])};
  if (in.is_object() && in.contains("first") && in.contains("second"))
    return {io::lie_element_from_json(in.at("first")), io::lie_element_from_json(in.at("second"))};
  throw ParseError("lie-contact expects [a, b], {\"first\": a, \"second\": b} or {\"vector\": [6 coordinates]}");
}

}  // namespace

Command parse_command(const std::string& s) {
  if (s == "factorize") return Command::factorize;
  if (s == "lift") return Command::lift;
  if (s == "verify") return Command::verify;
  if (s == "lie-contact") return Command::lie_contact;
  throw ParseError("unknown command '" + s + "'");
}

std::string to_string(Command c) {
  switch (c) {
    case Command::factorize: return "factorize";
    case Command::lift: return "lift";
    case Command::verify: return "verify";
    case Command::lie_contact: return "lie-contact";
  }
  return "?";
}

JobReport cmd_factorize(const JobSpec& job) {
  const auto t = transform_of(job);
  const auto r = klein::factorize_matrix(t, job.mode);
  JobReport out;
  out.status = r.verified ? exit_code::ok : exit_code::verification_failed;
  out.payload = io::to_json(r);
  out.payload["transform"] = io::to_json(t);
  out.payload["scalar_mode"] = to_string(job.mode);
  out.text = chain_text(r);
  return out;
}

JobReport cmd_lift(const JobSpec& job) {
  const auto t = transform_of(job);
  const Versor g = klein::proj_to_versor(t, job.mode);
  const auto back = klein::versor_to_proj(g, t.action);
  const auto scale = proportionality(back.matrix, t.matrix);
  const auto coords = klein::table_coordinates(g.value(), g.parity());

  JobReport out;
  json witness = json::array();
  for (const auto& w : *g.witness()) witness.push_back(io::to_json(w));
  out.payload = {{"parity", g.parity() == Parity::even ? "even" : "odd"},
                 {"coefficients", io::table_json(coords, g.parity())},
                 {"versor", io::to_json(g.value())},
                 {"witness", witness},
                 {"roundtrip", io::to_json(back)},
                 {"scale", scale ? io::to_json(*scale) : json(nullptr)}};
  out.status = scale ? exit_code::ok : exit_code::verification_failed;

  std::ostringstream os;
  os << "versor (" << (g.parity() == Parity::even ? "even" : "odd") << "): " << g.value().str() << "\n";
  os << "table coefficients:";
  const char prefix = g.parity() == Parity::even ? 'g' : 'h';
  for (std::size_t i = 1; i <= 32; ++i)
    if (!coords[i].is_zero()) os << " " << prefix << i << "=" << coords[i];
  os << "\nwitness:\n";
  for (const auto& w : *g.witness()) os << "  " << w.str() << "\n";
  os << "roundtrip " << klein::to_string(back.kind) << " on " << klein::to_string(back.action) << ":\n"
     << io::matrix_text(back.matrix) << "scale: " << (scale ? scale->str() : "none") << "\n";
  out.text = os.str();
  return out;
}

JobReport cmd_verify(const JobSpec& job) {
  const json& in = job.input;
  if (!in.is_object() || !in.contains("factorization") || !in.contains("transform"))
    throw ParseError("verify expects {\"factorization\": ..., \"transform\": ...}");
  auto r = io::factorization_from_json(in.at("factorization"));
  const auto t = io::transform_from_json(in.at("transform"), job.kind, job.action);
  const bool ok = klein::verify_factorization(r, t);
  JobReport out;
  out.status = ok ? exit_code::ok : exit_code::verification_failed;
  out.payload = {{"verified", ok}, {"scale", io::to_json(r.scale)}, {"factors", r.polarities.size()}};
  if (r.residual.rows() != 0) out.payload["residual"] = io::to_json(r.residual);
  out.text = std::string("verified: ") + (ok ? "true" : "false") + "\nscale: " + r.scale.str() + "\n";
  return out;
}

JobReport cmd_lie_contact(const JobSpec& job) {
  const json& in = job.input;
  JobReport out;
  if (in.is_object() && in.contains("vector")) {
    const Multivector a = io::multivector_from_json(in.at("vector"), lie::algebra());
    const Scalar d = lie::laguerre_defect(a);
    out.payload = {{"a1_plus_a2", io::to_json(d)}, {"laguerre", d.is_zero()}};
    out.text = "a1+a2: " + d.str() + "\nlaguerre: " + (d.is_zero() ? "true" : "false") + "\n";
    return out;
  }
  const auto [first, second] = element_pair(in);
  const auto c1 = lie::lie_encode(first), c2 = lie::lie_encode(second);
  const Scalar l = lie::lie_form(c1, c2);
  const bool contact = lie::oriented_contact(c1, c2);
  out.payload = {{"first", io::to_json(c1)}, {"second", io::to_json(c2)}, {"form", io::to_json(l)}, {"contact", contact}};
  std::ostringstream os;
  os << "first:  " << out.payload["first"].dump() << "\nsecond: " << out.payload["second"].dump() << "\nform: " << l
     << "\ncontact: " << (contact ? "true" : "false") << "\n";
  out.text = os.str();
  return out;
}

JobReport run_job(const JobSpec& job) {
  try {
    switch (job.command) {
      case Command::factorize: return cmd_factorize(job);
      case Command::lift: return cmd_lift(job);
      case Command::verify: return cmd_verify(job);
      case Command::lie_contact: return cmd_lie_contact(job);
    }
    return failure(exit_code::parse_error, "ParseError", "unknown command");
  } catch (const ComplexRequired& e) {
    JobReport r = failure(exit_code::complex_required, "ComplexRequired", e.what());
    r.payload["diagnosis"] = e.diagnosis();
    r.payload["determinant"] = e.determinant();
    return r;
  } catch (const NotLiftable& e) {
    JobReport r = failure(exit_code::not_liftable, "NotLiftable", e.what());
    r.payload["diagnosis"] = e.diagnosis();
    r.payload["determinant"] = e.determinant();
    return r;
  } catch (const SingularTransform& e) {
    return failure(exit_code::singular, "SingularTransform", e.what());
  } catch (const ParseError& e) {
    return failure(exit_code::parse_error, "ParseError", e.what());
  } catch (const DimensionMismatch& e) {
    return failure(exit_code::parse_error, "DimensionMismatch", e.what());
  } catch (const io::json::exception& e) {
    return failure(exit_code::parse_error, "ParseError", e.what());
  } catch (const OffQuadric& e) {
    return failure(exit_code::verification_failed, "OffQuadric", e.what());
  } catch (const std::exception& e) {
    return failure(exit_code::verification_failed, "Error", e.what());
  }
}

bool is_batch(const io::json& input) {
  return input.is_array() && !input.empty() &&
         std::all_of(input.begin(), input.end(), [](const json& j) { return j.is_object() && j.contains("input"); });
}

std::vector<JobReport> run_batch(const JobSpec& defaults, const io::json& jobs) {
  // Specs are built serially so malformed entries report per job.
  std::vector<std::optional<JobSpec>> specs(jobs.size());
  std::vector<JobReport> reports(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    try {
      JobSpec s = defaults;
      const json& j = jobs[i];
      s.input = j.at("input");
      if (j.contains("command")) s.command = parse_command(j.at("command").get<std::string>());
      if (j.contains("scalar_mode")) {
        const auto m = j.at("scalar_mode").get<std::string>();
        if (m != "rational" && m != "complex") throw ParseError("unknown scalar mode '" + m + "'");
        s.mode = m == "complex" ? ScalarMode::complex : ScalarMode::rational;
      }
      if (j.contains("kind")) s.kind = klein::parse_kind(j.at("kind").get<std::string>());
      if (j.contains("action")) s.action = klein::parse_action(j.at("action").get<std::string>());
      specs[i] = std::move(s);
    } catch (const std::exception& e) {
      reports[i] = failure(exit_code::parse_error, "ParseError", e.what());
    }
  }
  kernels::omp::for_each_index(jobs.size(), [&](std::size_t i) {
    if (specs[i]) reports[i] = run_job(*specs[i]);
  });
  return reports;
}

int batch_status(const std::vector<JobReport>& reports) {
  int s = exit_code::ok;
  for (const auto& r : reports) s = std::max(s, r.status);
  return s;
}

}  // namespace nullpol::cli
