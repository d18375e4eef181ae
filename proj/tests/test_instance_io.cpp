#include <doctest.h>

#include <random>

#include <json.hpp>

#include "mlbp/instance_io.hpp"
#include "mlbp/solver_exact.hpp"
#include "support.hpp"

using namespace mlbp;

namespace {

ParseError parse_error(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("parse succeeded");
  return ParseError(ParseError::Kind::kMalformed, 0, "");
}

}  // namespace

TEST_CASE("parse_instance") {
  CHECK(parse_instance("3 3 3\n0 1 0\n1 2 1\n0 2 2\n") == testing::triangle());
  CHECK(parse_instance("# comment\n3 2 1\n0 1 0\n1 2 0\n") == testing::path3());
  CHECK(parse_instance("\r\n# c\r\n3 2 1\r\n\r\n0 1 0\r\n  1\t2 0  \r\n") == testing::path3());
  CHECK(parse_instance("3 2 1\n0 1 0\n1 2 0") == testing::path3());  // no trailing newline
}

TEST_CASE("parse errors carry line numbers") {
  const ParseError loop = parse_error("3 1 1\n0 0 0\n");
  CHECK(loop.kind() == ParseError::Kind::kGraph);
  CHECK(loop.line() == 2);

  const ParseError dup = parse_error("# x\n3 2 1\n0 1 0\n\n1 0 0\n");
  CHECK(dup.kind() == ParseError::Kind::kGraph);
  CHECK(dup.line() == 5);

  CHECK(parse_error("3 2 1\n0 1 0\n").kind() == ParseError::Kind::kEdgeCountMismatch);
  CHECK(parse_error("3 1 1\n0 1 0\n1 2 0\n").kind() == ParseError::Kind::kEdgeCountMismatch);
  CHECK(parse_error("").kind() == ParseError::Kind::kMalformed);
  CHECK(parse_error("3 1\n").line() == 1);
  CHECK(parse_error("3 1 1\n0 1\n").line() == 2);
  CHECK(parse_error("3 1 1\n0 x 0\n").kind() == ParseError::Kind::kMalformed);
  CHECK(parse_error("3 1 1\n0 -1 0\n").kind() == ParseError::Kind::kMalformed);
  CHECK(parse_error("3 1 1\n0 1 1\n").kind() == ParseError::Kind::kGraph);
}

TEST_CASE("serialize_instance") {
  CHECK(serialize_instance(testing::triangle()) == "3 3 3\n0 1 0\n0 2 2\n1 2 1\n");
  CHECK(serialize_instance(build_graph(2, 1, {})) == "2 0 1\n");
}

TEST_CASE("round trip on random instances") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 50; ++round) {
    const LabeledGraph g = testing::random_graph(1 + rng() % 30, 0.3, 1 + rng() % 10, rng);
    const std::string text = serialize_instance(g);
    CHECK(parse_instance(text) == g);
    CHECK(serialize_instance(parse_instance(text)) == text);
  }
}

TEST_CASE("generate") {
  const LabeledGraph k5 = generate({5, 3, 1.0, 7, std::nullopt});
  CHECK(k5.num_edges() == 10);
  CHECK(k5.num_labels() == 3);

  InstanceSpec tri{3, 1, 1.0, 0, Mode::kVertex};
  CHECK(feasibility_check(generate(tri), Mode::kVertex));

  InstanceSpec sparse{20, 20, 0.05, 1, Mode::kEdge};
  CHECK(sparse.target_edges() == 9);
  try {
    generate(sparse);
    FAIL("expected exhaustion");
  } catch (const GenerateError& e) {
    CHECK(e.kind() == GenerateError::Kind::kFeasibilityRetriesExhausted);
    CHECK(e.attempts() == 1000);
  }

  for (double bad : {0.0, -0.1, 1.5}) {
    try {
      generate({5, 2, bad, 0, std::nullopt});
      FAIL("expected density error");
    } catch (const GenerateError& e) {
      CHECK(e.kind() == GenerateError::Kind::kDensityOutOfRange);
    }
  }
}

TEST_CASE("generated instances respect m and ensure_feasible") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    InstanceSpec spec{12, 6, 0.5, seed, std::nullopt};
    const LabeledGraph g = generate(spec);
    CHECK(g.num_edges() == spec.target_edges());
    CHECK(generate(spec) == g);  // deterministic

    for (Mode mode : {Mode::kEdge, Mode::kVertex}) {
      InstanceSpec ensured{10, 5, 0.4, seed, mode};
      CHECK(feasibility_check(generate(ensured), mode));
    }
  }
}

TEST_CASE("serialize_result") {
  SolverResult r;
  r.mode = Mode::kVertex;
  r.status = SolveStatus::kOptimal;
  r.labels = LabelSet::of(3, {1, 0});
  r.nodes_explored = 12;
  const auto j = nlohmann::json::parse(serialize_result(r, ResultFormat::kJson));
  CHECK(j["labels"] == nlohmann::json::array({0, 1}));
  CHECK(j["size"] == 2);
  CHECK(j["status"] == "optimal");
  CHECK(j["mode"] == "vertex");
  CHECK(j["nodes_explored"] == 12);
  CHECK(j.contains("time_ms"));

  const std::string json = serialize_result(r, ResultFormat::kJson);
  CHECK(json.rfind("{\"mode\":\"vertex\",\"status\":\"optimal\",\"labels\":[0,1],\"size\":2,\"nodes_explored\":12,", 0) == 0);
  CHECK(json.back() == '\n');

  SolverResult none;
  none.labels = LabelSet(3);
  const auto k = nlohmann::json::parse(serialize_result(none, ResultFormat::kJson));
  CHECK(k["size"] == 0);
  CHECK(k["labels"] == nlohmann::json::array());
  CHECK(k["status"] == "infeasible");

  r.status = SolveStatus::kFeasible;
  CHECK(serialize_result(r, ResultFormat::kCsvRow) == "vertex,feasible,2,0 1,12,0.000\n");
}
