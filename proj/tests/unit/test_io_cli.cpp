#include <doctest.h>

#include "nullpol/cli.hpp"
#include "nullpol/errors.hpp"
#include "test_support.hpp"

using namespace nullpol;
using io::json;

namespace {

cli::JobSpec job(cli::Command c, json input, ScalarMode mode = ScalarMode::rational) {
  cli::JobSpec j;
  j.command = c;
  j.input = std::move(input);
  j.mode = mode;
  return j;
}

json paper_chain_json() {
  auto vs = support::paper_vectors();
  std::reverse(vs.begin(), vs.end());
  klein::FactorizationResult r;
  r.polarities = klein::polarity_chain(vs, klein::Action::points);
  return io::to_json(r);
}

}  // namespace

TEST_CASE("scalar and matrix JSON") {
  CHECK(io::scalar_from_json(json("3/4")) == Scalar::fraction(3, 4));
  CHECK(io::scalar_from_json(json(-2)) == Scalar(-2));
  CHECK(io::scalar_from_json(json("1-i")) == Scalar(mpq_class(1), mpq_class(-1)));
  CHECK_THROWS_AS(io::scalar_from_json(json(0.5)), ParseError);
  CHECK(io::matrix_from_json(io::to_json(support::paper_k())) == support::paper_k());
  CHECK_THROWS_AS(io::matrix_from_json(json::parse("[[1,2],[3]]")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse("[]")), ParseError);
  CHECK_THROWS_AS(io::parse("{not json"), ParseError);
}

TEST_CASE("multivector JSON") {
  const Multivector m = support::kblade("12", Scalar::fraction(1, 2)) + support::kvec({0, 0, 3, 0, 0, 0});
  CHECK(io::multivector_from_json(io::to_json(m), klein::algebra()) == m);
  CHECK(io::multivector_from_json(json::parse("[1,0,0,1,0,0]"), klein::algebra()) == support::kvec({1, 0, 0, 1, 0, 0}));
  CHECK_THROWS_AS(io::multivector_from_json(json::parse("[1,2]"), klein::algebra()), ParseError);
  CHECK_THROWS_AS(io::multivector_from_json(json::parse("[{\"mask\": 99, \"coeff\": 1}]"), klein::algebra()), ParseError);
}

TEST_CASE("transform JSON") {
  const auto t = io::transform_from_json(json::parse(R"({"matrix": [[0,1,0,0],[-1,0,0,0],[0,0,0,1],[0,0,-1,0]],
                                                          "kind": "correlation", "action": "planes"})"));
  CHECK(t.kind == klein::TransformKind::correlation);
  CHECK(t.action == klein::Action::planes);
  const auto bare = io::transform_from_json(io::to_json(support::paper_k()), klein::TransformKind::correlation);
  CHECK(bare.kind == klein::TransformKind::correlation);
  CHECK(bare.action == klein::Action::points);
  CHECK_THROWS_AS(io::transform_from_json(json::parse("[[1,0],[0,1]]")), ParseError);
  CHECK_THROWS_AS(io::transform_from_json(json::parse(R"({"matrix": [[1]], "kind": "affine"})")), ParseError);
}

TEST_CASE("factorization JSON round trip") {
  const auto r = klein::factorize_matrix({support::paper_k()});
  const auto back = io::factorization_from_json(io::to_json(r));
  CHECK(back.factors == r.factors);
  REQUIRE(back.polarities.size() == r.polarities.size());
  for (std::size_t i = 0; i < r.polarities.size(); ++i) {
    CHECK(back.polarities[i].matrix == r.polarities[i].matrix);
    CHECK(back.polarities[i].action == r.polarities[i].action);
  }
  CHECK(back.scale == r.scale);
  CHECK(back.verified);
}

TEST_CASE("Lie element JSON") {
  for (const lie::LieElement& e : {lie::LieElement(lie::Point{{1, 2, 3}}), lie::LieElement(lie::Infinity{}),
                                   lie::LieElement(lie::Sphere{{0, 0, 0}, Scalar::fraction(-1, 2)}),
                                   lie::LieElement(lie::Plane{{0, 0, 1}, 4})}) {
    const json j = io::to_json(e);
    CHECK(io::to_json(io::lie_element_from_json(j)) == j);
  }
  CHECK(io::to_json(lie::Sphere{{0, 0, 0}, 1})["variant"] == "sphere");
  CHECK_THROWS_AS(io::lie_element_from_json(json::parse(R"({"variant": "torus"})")), ParseError);
  CHECK_THROWS_AS(io::lie_element_from_json(json::parse(R"({"variant": "point", "u": [1, 2]})")), ParseError);
}

TEST_CASE("text matrices are exact and aligned") {
  const Matrix m{{Scalar::fraction(-1, 4), 2}, {10, 0}};
  CHECK(io::matrix_text(m, "") == "-1/4  2\n  10  0\n");
}

TEST_CASE("factorize command") {
  const auto k = cli::run_job(job(cli::Command::factorize, io::to_json(support::paper_k())));
  CHECK(k.status == cli::exit_code::ok);
  CHECK(k.payload["verified"] == true);
  CHECK(k.payload["polarities"].size() <= 6);
  CHECK(k.text.find("verified: true") != std::string::npos);

  const auto id = cli::run_job(job(cli::Command::factorize, io::to_json(Matrix::identity(4))));
  CHECK(id.status == cli::exit_code::ok);
  CHECK(id.payload["factors"].empty());
  CHECK(id.payload["scale"] == "1");

  const auto kp = cli::run_job(job(cli::Command::factorize, io::to_json(support::paper_k_prime())));
  CHECK(kp.status == cli::exit_code::complex_required);
  CHECK(kp.payload["error"] == "ComplexRequired");
  CHECK(kp.payload["determinant"] == "-4");
  CHECK(kp.payload.contains("diagnosis"));
  const auto kpc = cli::run_job(job(cli::Command::factorize, io::to_json(support::paper_k_prime()), ScalarMode::complex));
  CHECK(kpc.status == cli::exit_code::ok);

  CHECK(cli::run_job(job(cli::Command::factorize, io::to_json(Matrix(4, 4)))).status == cli::exit_code::singular);
  CHECK(cli::run_job(job(cli::Command::factorize, json::parse("[[1,2],[3,4]]"))).status == cli::exit_code::parse_error);
  CHECK(cli::run_job(job(cli::Command::factorize, json::parse(R"({"matrix": "x"})"))).status ==
        cli::exit_code::parse_error);
  const Matrix det2{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}};
  CHECK(cli::run_job(job(cli::Command::factorize, io::to_json(det2))).status == cli::exit_code::not_liftable);
}

TEST_CASE("factorize output re-verifies") {
  support::Rng rng(107);
  for (int trial = 0; trial < 6; ++trial) {
    const Matrix m = trial == 0 ? support::paper_k() : rng.liftable_matrix();
    const auto out = cli::run_job(job(cli::Command::factorize, io::to_json(m)));
    REQUIRE(out.status == cli::exit_code::ok);
    const json bundle = {{"factorization", json::parse(out.payload.dump())}, {"transform", out.payload["transform"]}};
    CHECK(cli::run_job(job(cli::Command::verify, bundle)).status == cli::exit_code::ok);
  }
}

TEST_CASE("lift command") {
  const auto k = cli::run_job(job(cli::Command::lift, io::to_json(support::paper_k())));
  CHECK(k.status == cli::exit_code::ok);
  CHECK(k.payload["parity"] == "even");
  CHECK(k.payload["coefficients"].begin().key().front() == 'g');
  CHECK(io::matrix_from_json(k.payload["roundtrip"]["matrix"]) ==
        io::scalar_from_json(k.payload["scale"]) * support::paper_k());

  const json m1 = {{"matrix", io::to_json(support::paper_matrices()[0])}, {"kind", "correlation"}, {"action", "points"}};
  const auto l1 = cli::run_job(job(cli::Command::lift, m1));
  CHECK(l1.status == cli::exit_code::ok);
  CHECK(l1.payload["parity"] == "odd");
  const Multivector v = io::multivector_from_json(l1.payload["versor"], klein::algebra());
  CHECK(support::proportional(v, support::kvec({1, 0, 0, 1, 0, 0})));

  const auto id = cli::run_job(job(cli::Command::lift, io::to_json(Matrix::identity(4))));
  CHECK(id.status == cli::exit_code::ok);
  CHECK(io::multivector_from_json(id.payload["versor"], klein::algebra()).is_scalar());
}

TEST_CASE("verify command") {
  const json k = io::to_json(support::paper_k());
  const auto ok = cli::run_job(job(cli::Command::verify, {{"factorization", paper_chain_json()}, {"transform", k}}));
  CHECK(ok.status == cli::exit_code::ok);
  CHECK(ok.payload["scale"] == "-4");

  json bad = paper_chain_json();
  bad["polarities"][0]["matrix"][0][1] = "7";
  bad["polarities"][0]["matrix"][1][0] = "-7";
  CHECK(cli::run_job(job(cli::Command::verify, {{"factorization", bad}, {"transform", k}})).status ==
        cli::exit_code::verification_failed);

  const json empty = {{"polarities", json::array()}};
  const auto e = cli::run_job(job(cli::Command::verify, {{"factorization", empty}, {"transform", io::to_json(Matrix::identity(4))}}));
  CHECK(e.status == cli::exit_code::ok);
  CHECK(e.payload["scale"] == "1");
  CHECK(cli::run_job(job(cli::Command::verify, k)).status == cli::exit_code::parse_error);
}

TEST_CASE("lie-contact command") {
  const json spheres = json::parse(R"([{"variant": "sphere", "center": ["0","0","0"], "radius": "1"},
                                       {"variant": "sphere", "center": ["2","0","0"], "radius": "-1"}])");
  const auto s = cli::run_job(job(cli::Command::lie_contact, spheres));
  CHECK(s.status == cli::exit_code::ok);
  CHECK(s.payload["contact"] == true);

  const json pi = json::parse(R"({"first": {"variant": "point", "u": [0, 0, 0]}, "second": {"variant": "infinity"}})");
  const auto p = cli::run_job(job(cli::Command::lie_contact, pi));
  CHECK(p.payload["contact"] == false);
  CHECK(p.payload["form"] == "-1");

  const auto lag = cli::run_job(job(cli::Command::lie_contact, json::parse(R"({"vector": [2, -2, 1, 0, 0, 3]})")));
  CHECK(lag.payload["laguerre"] == true);
  CHECK(lag.payload["a1_plus_a2"] == "0");
  CHECK(cli::run_job(job(cli::Command::lie_contact, json::parse("[1]"))).status == cli::exit_code::parse_error);
}

TEST_CASE("batches keep order and isolate failures") {
  const json jobs = json::array({
      {{"input", io::to_json(support::paper_k())}},
      {{"input", io::to_json(support::paper_k_prime())}},
      {{"input", io::to_json(support::paper_k_prime())}, {"scalar_mode", "complex"}},
      {{"input", json::parse(R"({"vector": [1, -1, 0, 0, 0, 0]})")}, {"command", "lie-contact"}},
      {{"input", io::to_json(Matrix::identity(4))}, {"scalar_mode", "quaternion"}},
  });
  CHECK(cli::is_batch(jobs));
  CHECK_FALSE(cli::is_batch(io::to_json(support::paper_k())));
  cli::JobSpec defaults;
  const auto reports = cli::run_batch(defaults, jobs);
  REQUIRE(reports.size() == 5);
  CHECK(reports[0].status == cli::exit_code::ok);
  CHECK(reports[1].status == cli::exit_code::complex_required);
  CHECK(reports[2].status == cli::exit_code::ok);
  CHECK(reports[3].payload["laguerre"] == true);
  CHECK(reports[4].status == cli::exit_code::parse_error);
  CHECK(cli::batch_status(reports) == cli::exit_code::parse_error);
  CHECK(cli::batch_status({}) == cli::exit_code::ok);
}

TEST_CASE("command names") {
  for (auto c : {cli::Command::factorize, cli::Command::lift, cli::Command::verify, cli::Command::lie_contact})
    CHECK(cli::parse_command(cli::to_string(c)) == c);
  CHECK_THROWS_AS(cli::parse_command("explode"), ParseError);
}
