#include <doctest.h>

#include "helpers.hpp"
#include "monideal/corpus.hpp"
#include "monideal/decomposition.hpp"
#include "monideal/filtrations.hpp"
#include "monideal/io.hpp"
#include "oracles.hpp"

using namespace mi;

namespace {

constexpr FiltrationKind kAllKinds[] = {FiltrationKind::Ordinary, FiltrationKind::Symbolic,
                                        FiltrationKind::Saturation, FiltrationKind::IntegralClosure};

std::optional<FiltrationSpec> try_spec(const MonomialIdeal& I, FiltrationKind k) {
  try {
    return FiltrationSpec(I, k);
  } catch (const HypothesisViolation&) {
    return std::nullopt;
  }
}

std::string failures(const VerificationReport& r) {
  std::string s;
  for (const auto& c : r.checks) {
    if (c.asserted && !c.pass) {
      s += c.name + ": expected " + c.expected + ", got " + c.computed + "\n";
    }
  }
  return s;
}

} // namespace

TEST_SUITE("filtrations") {

TEST_CASE("filtration axioms on the corpus") {
  for (const auto& I : random_ideals(41, 12)) {
    for (auto kind : kAllKinds) {
      auto F = try_spec(I, kind);
      if (!F) {
        continue;
      }
      CAPTURE(to_string(I));
      CAPTURE(to_string(kind));
      CHECK(F->member(0).is_unit());
      for (unsigned p = 1; p <= 3; ++p) {
        CHECK(is_subset(F->member(p + 1), F->member(p)));
        for (unsigned q = 1; p + q <= 4; ++q) {
          CHECK(is_subset(product(F->member(p), F->member(q)), F->member(p + q)));
        }
      }
    }
  }
}

TEST_CASE("saturation of an m-primary ideal is rejected") {
  auto I = ideal({"x", "y"}, {{2, 0}, {0, 3}});
  CHECK_THROWS_AS(FiltrationSpec(I, FiltrationKind::Saturation), HypothesisViolation);
  CHECK_THROWS_AS(FiltrationSpec(MonomialIdeal::unit(I.ring()), FiltrationKind::Ordinary), ImproperInput);
}

TEST_CASE("integral closure matches the planar Newton polygon") {
  for (const auto& I : random_ideals(43, 30)) {
    if (I.ring().size() != 2) {
      continue;
    }
    const auto closure = integral_closure(I);
    for (const auto& a : oracle::box(2, 9)) {
      CAPTURE(to_string(I));
      CHECK(closure.contains(a) == oracle::newton_2d(I.gens(), a));
    }
  }
  CHECK(to_string(integral_closure(ideal({"x", "y"}, {{2, 0}, {0, 2}}))) == "(x^2, x*y, y^2)");
  CHECK(to_string(integral_closure(ideal({"x", "y", "z"}, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}))) ==
        "(x*y, x*z, y*z)");
}

TEST_CASE("binomial expansion for prime summands") {
  auto I = ideal({"x"}, {{1}});
  auto J = ideal({"y"}, {{1}});
  BinomialSum bs(FiltrationSpec(I, FiltrationKind::Ordinary), FiltrationSpec(J, FiltrationKind::Ordinary));
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(binomial_sum(bs, n) == power(ideal({"x", "y"}, {{1, 0}, {0, 1}}), n));
  }
  CHECK_THROWS_AS(BinomialSum(FiltrationSpec(I, FiltrationKind::Ordinary),
                              FiltrationSpec(I, FiltrationKind::Ordinary)),
                  NameCollision);
}

TEST_CASE("binomial expansion of symbolic powers on the corpus") {
  for (const auto& [I, J] : random_pairs(47, 10)) {
    const auto r = verify_binomial_theorem(I, J, 3);
    CAPTURE(to_string(I));
    CAPTURE(to_string(J));
    CHECK_MESSAGE(r.pass(), failures(r));
  }
}

TEST_CASE("tensor products of small modules") {
  MonomialModule a(ideal({"x"}, {{1}}), ideal({"x"}, {{2}}));
  MonomialModule b(ideal({"y"}, {{1}}), ideal({"y"}, {{2}}));
  const auto t = tensor_modules(a, b);
  CHECK(depth_module(t) == 0);
  CHECK(regularity(t) == 2);
  CHECK(verify_tensor_depth_reg(a, b).pass());
  const auto q = tensor_modules(MonomialModule::quotient(ideal({"x", "y"}, {{1, 1}})),
                                MonomialModule::quotient(ideal({"u", "v"}, {{2, 0}, {0, 2}})));
  CHECK(depth_module(q) == 1);
  CHECK(regularity(q) == 3);
  CHECK(dim_module(q) == 1);
}

TEST_CASE("depth and regularity formulas on a small corpus") {
  for (const auto& [I, J] : random_pairs(53, 4)) {
    const auto r = verify_depth_reg_formulas(I, J, 2);
    CAPTURE(to_string(I));
    CAPTURE(to_string(J));
    CHECK_MESSAGE(r.pass(), failures(r));
  }
}

TEST_CASE("linear and symbolic-quotient formulas") {
  auto I = ideal({"x", "y", "z"}, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  auto J = ideal({"u", "v"}, {{1, 0}, {0, 1}});
  CHECK(verify_linear(I, J, 3).pass());
  CHECK(verify_symbolic_quotient(I, 3).pass());
}

TEST_CASE("Tor vanishing and staged splittings") {
  for (const auto& [I, J] : random_pairs(59, 6)) {
    CAPTURE(to_string(I));
    CAPTURE(to_string(J));
    const auto t = verify_tor_vanishing(I, 3);
    CHECK_MESSAGE(t.pass(), failures(t));
    const auto s = verify_staged_splittings(I, J, 2);
    CHECK_MESSAGE(s.pass(), failures(s));
  }
}

TEST_CASE("Waldschmidt constant") {
  auto tri = ideal({"x", "y", "z"}, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(waldschmidt_exact_squarefree(tri) == Rational(3, 2));
  // Covering LP cross-checked by vertex enumeration.
  const auto lp = waldschmidt_lp(tri);
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> rhs;
  for (const auto& c : lp.constraints) {
    REQUIRE(c.relation == Relation::GreaterEqual);
    A.push_back(c.coeffs);
    rhs.push_back(c.rhs);
  }
  CHECK(oracle::lp_vertex_min(lp.objective, A, rhs) == Rational(3, 2));
  CHECK(waldschmidt_alpha(tri, 2) == 3);
  CHECK(waldschmidt_estimate(tri, 4) == Rational(3, 2));
  CHECK_THROWS_AS(waldschmidt_exact_squarefree(ideal({"x"}, {{2}})), ImproperInput);

  CorpusLimits sf;
  sf.squarefree = true;
  for (const auto& [I, J] : random_pairs(61, 6, sf)) {
    const auto wI = waldschmidt_exact_squarefree(I);
    const auto wJ = waldschmidt_exact_squarefree(J);
    BinomialSum bs(FiltrationSpec(I, FiltrationKind::Symbolic), FiltrationSpec(J, FiltrationKind::Symbolic));
    const auto sumIJ = binomial_sum(bs, 1);
    CHECK(waldschmidt_exact_squarefree(sumIJ) == std::min(wI, wJ));
    Rational prev = waldschmidt_estimate(I, 1);
    for (unsigned m = 2; m <= 4; ++m) {
      const auto cur = waldschmidt_estimate(I, m);
      CHECK(cur <= prev);
      CHECK(cur >= wI);
      prev = cur;
    }
    // I^(1) I^(2) lies in I^(3).
    CHECK(waldschmidt_alpha(I, 3) <= waldschmidt_alpha(I, 1) + waldschmidt_alpha(I, 2));
  }
}

}
