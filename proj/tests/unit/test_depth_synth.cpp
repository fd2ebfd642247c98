#include <doctest.h>

#include "helpers.hpp"
#include "monideal/corpus.hpp"
#include "monideal/depth_synth.hpp"
#include "monideal/io.hpp"

using namespace mi;

namespace {

std::vector<int> ints(std::vector<unsigned> v) { return {v.begin(), v.end()}; }

std::string types_text(const std::vector<BlockType>& ts) {
  std::string s;
  for (const auto& t : ts) {
    s += (s.empty() ? "" : " ") + t.to_string();
  }
  return s;
}

} // namespace

TEST_SUITE("depth_synth") {

TEST_CASE("function specs") {
  DepthFunctionSpec f{{0, 2, 1}, 1};
  CHECK(f.values(5) == std::vector<unsigned>{0, 2, 1, 1, 1});
  DepthFunctionSpec g{{0, 2}, 0};
  CHECK(same_function(f, DepthFunctionSpec{{0, 2, 1, 1}, 1}));
  CHECK_FALSE(same_function(f, g));
  CHECK((f + g).values(4) == std::vector<unsigned>{0, 4, 1, 1});
}

TEST_CASE("profile decomposition") {
  CHECK(types_text(decompose_profile({{0, 0, 1}, 1})) == "typeI(3)");
  CHECK(types_text(decompose_profile({{1, 2, 1}, 1})) == "constant1 typeII(2)");
  CHECK(types_text(decompose_profile({{0, 2, 1}, 1})) == "typeI(2) typeII(2)");
  CHECK(types_text(decompose_profile({{1, 0, 2}, 2})) == "typeI(3) typeI(3) typeII(1)");
  CHECK(decompose_profile({{}, 0}).empty());
  CHECK(types_text(decompose_profile({{}, 3})) == "constant1 constant1 constant1");
}

TEST_CASE("block generators") {
  CHECK(to_string(block_type1(2).ideal) == "(x^4, x^3*y, x*y^3, y^4, x^2*y^2*z)");
  CHECK(to_string(block_type1(3).ideal) == "(x^5, x^4*y, x*y^4, y^5, x^3*y^2*z)");
  CHECK(to_string(block_mst(2).ideal) == "(t^3, t*u*v, u^2*v)");
  CHECK(to_string(block_mst(3).ideal) == "(t^4, t*u^2*v, u^3*v)");
  CHECK(block_type2(2).ideal.ring().vars() == std::vector<std::string>{"x", "t", "u", "v"});
  CHECK(block_type1(2, "7").ideal.ring().var(2) == "z7");
  CHECK_THROWS_AS(block_type1(1), ImproperInput);
}

TEST_CASE("block depth profiles") {
  for (unsigned d : {2u, 3u}) {
    CHECK(depth_profile(block_type1(d).ideal, d + 2) == ints(block_type1(d).claimed_profile.values(d + 2)));
    CHECK(depth_profile(block_mst(d).ideal, d + 2) == ints(block_mst(d).claimed_profile.values(d + 2)));
    CHECK(depth_profile(block_type2(d).ideal, 5) == ints(block_type2(d).claimed_profile.values(5)));
  }
  CHECK(depth_profile(block_type2(4).ideal, 6) == std::vector<int>{0, 0, 0, 1, 0, 0});
  CHECK(depth_profile(block_type2(1).ideal, 5) == std::vector<int>{1, 0, 0, 0, 0});
  CHECK(depth_profile(block_constant1().ideal, 3) == std::vector<int>{1, 1, 1});
}

TEST_CASE("additive gluing") {
  auto I = ideal({"x", "a"}, {{1, 0}});
  auto J = ideal({"y", "b"}, {{1, 0}});
  const auto Q = glue_additive(I, "x", J, "y");
  CHECK(Q.ring().vars() == std::vector<std::string>{"x", "a", "b"});
  CHECK(to_string(Q) == "(x^2)");
  CHECK(depth_profile(Q, 3) == std::vector<int>{2, 2, 2});
  CHECK_THROWS_AS(glue_additive(I, "q", J, "y"), UnknownVariable);
}

TEST_CASE("reduction gluing hypotheses") {
  auto A = block_type1(2).ideal;
  auto B = block_mst(2).ideal;
  // t is in the radical of the MST ideal but u is not.
  CHECK_THROWS_AS(glue_reduction(A, {"y", "z"}, B, {"t", "v"}), HypothesisViolation);
  CHECK_THROWS_AS(glue_reduction(A, {"y", "y"}, B, {"u", "v"}), HypothesisViolation);
  CHECK_THROWS_AS(glue_reduction(ideal({"x", "y"}, {{1, 1}}), {"x", "y"}, B, {"u", "v"}), HypothesisViolation);
}

TEST_CASE("synthesis of small profiles") {
  const auto three = synthesize_depth_ideal({{}, 3});
  CHECK(three.report.pass());
  CHECK(depth_profile(three.Q, 3) == std::vector<int>{3, 3, 3});

  const auto r = synthesize_depth_ideal({{0, 2, 1}, 1});
  CHECK(r.report.pass());
  CHECK(r.Q.ring().size() == 6);
  for (const auto& row : r.table) {
    CHECK(row.computed == static_cast<int>(row.expected));
  }

  const auto zero = synthesize_depth_ideal({{}, 0});
  CHECK(to_string(zero.Q) == "(x0)");
  CHECK(zero.report.pass());
}

TEST_CASE("budget refusal") {
  SynthesisOptions tight;
  tight.max_vars = 4;
  CHECK_THROWS_AS(synthesize_depth_ideal({{0, 2, 1}, 1}, tight), BudgetExceeded);
  tight.verify_up_to = 0;
  CHECK_NOTHROW(synthesize_depth_ideal({{0, 2, 1}, 1}, tight));
}

TEST_CASE("Ratliff sets") {
  const auto r = ratliff_ideal({2});
  CHECK(r.report.pass());
  CHECK(r.synthesis.report.pass());
  CHECK(r.f.values(4) == std::vector<unsigned>{1, 0, 1, 1});
  CHECK_THROWS_AS(ratliff_ideal({0}), ImproperInput);
}

TEST_CASE("associated primes under additive gluing") {
  const auto pairs = random_pairs(67, 12);
  for (const auto& [I, J] : pairs) {
    CAPTURE(to_string(I));
    CAPTURE(to_string(J));
    CHECK(verify_ass_control(I, "x", J, "u").pass());
  }
  CHECK(verify_ass_control(block_type1(2).ideal, "x", block_constant1("1").ideal, "x1").pass());
}

}
