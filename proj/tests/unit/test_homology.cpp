#include <doctest.h>

#include "helpers.hpp"
#include "monideal/corpus.hpp"
#include "monideal/homology.hpp"
#include "monideal/io.hpp"
#include "oracles.hpp"

using namespace mi;

namespace {

oracle::BettiMap as_map(const BettiTable& t) {
  oracle::BettiMap out;
  for (const auto& [key, count] : t.entries()) {
    out[key] = count;
  }
  return out;
}

} // namespace

TEST_SUITE("homology") {

TEST_CASE("field spec rejects non-primes") {
  CHECK_THROWS_AS(FieldSpec(4), ImproperInput);
  CHECK_THROWS_AS(FieldSpec(1), ImproperInput);
  CHECK(FieldSpec(2).characteristic() == 2);
  CHECK(FieldSpec().characteristic() == 32003);
}

TEST_CASE("face homology of small complexes") {
  // Boundary of a triangle: reduced H_1 = 1 (face size 2 in this grading).
  FaceSet circle(3, {0, 1, 2, 4, 3, 5, 6});
  const auto h = face_homology(circle, 32003);
  CHECK(h[2] == 1);
  CHECK(h[0] == 0);
  CHECK(h[1] == 0);
  FaceSet full(3, {0, 1, 2, 4, 3, 5, 6, 7});
  for (auto v : face_homology(full, 32003)) {
    CHECK(v == 0);
  }
}

TEST_CASE("Betti tables match the Taylor oracle at p = 32003 and p = 2") {
  std::size_t compared = 0;
  for (const auto& I : random_ideals(23, 40)) {
    if (I.num_gens() > 4) {
      continue;
    }
    for (std::uint32_t p : {32003u, 2u}) {
      CAPTURE(to_string(I));
      CAPTURE(p);
      CHECK(as_map(betti_table_quotient(I, FieldSpec(p))) == oracle::taylor_betti(I, p));
    }
    ++compared;
  }
  CHECK(compared > 30);
}

TEST_CASE("ideal and quotient tables are shifts of each other") {
  for (const auto& I : random_ideals(29, 15)) {
    const auto q = betti_table_quotient(I);
    const auto i = betti_table(I);
    for (const auto& [key, count] : i.entries()) {
      CHECK(q.at(key.first + 1, key.second) == count);
    }
    CHECK(regularity(I) == regularity_quotient(I) + 1);
  }
}

TEST_CASE("classic examples") {
  // Three points in the plane: (xy, yz, xz) has Betti numbers 1, 3, 2.
  auto I = ideal({"x", "y", "z"}, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  const auto t = betti_table_quotient(I);
  CHECK(t.total(0) == 1);
  CHECK(t.total(1) == 3);
  CHECK(t.total(2) == 2);
  CHECK(t.projective_dimension() == 2);
  CHECK(t.regularity() == 1);
  CHECK(depth_quotient(I) == 1);
  // Complete intersection x^2, y^3: Koszul.
  auto C = ideal({"x", "y"}, {{2, 0}, {0, 3}});
  CHECK(depth_quotient(C) == 0);
  CHECK(regularity_quotient(C) == 3);
  // Maximal ideal: pd = n.
  auto m = MonomialIdeal::maximal(PolyRing{"a", "b", "c", "d"});
  CHECK(projective_dimension(MonomialModule::quotient(m)) == 4);
}

TEST_CASE("field mismatch on comparison") {
  auto I = ideal({"x", "y"}, {{1, 1}});
  CHECK_THROWS_AS((void)(betti_table_quotient(I, FieldSpec(2)) == betti_table_quotient(I)), FieldMismatch);
}

TEST_CASE("characteristic-dependent homology") {
  // Stanley-Reisner ideal of the 6-vertex triangulation of RP^2: torsion in
  // H_1 makes the Betti numbers differ in characteristic 2.
  std::vector<std::vector<Exponent>> gens;
  const std::vector<std::vector<int>> facets = {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                                                {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
  auto is_face = [&](std::uint32_t mask) {
    for (const auto& f : facets) {
      std::uint32_t fm = 0;
      for (int v : f) {
        fm |= 1u << v;
      }
      if ((mask & ~fm) == 0) {
        return true;
      }
    }
    return false;
  };
  for (std::uint32_t mask = 1; mask < 64; ++mask) {
    if (is_face(mask)) {
      continue;
    }
    bool minimal = true;
    for (int v = 0; v < 6; ++v) {
      if ((mask >> v & 1u) && !is_face(mask & ~(1u << v))) {
        minimal = false;
      }
    }
    if (minimal) {
      std::vector<Exponent> e(6, 0);
      for (int v = 0; v < 6; ++v) {
        e[v] = mask >> v & 1u;
      }
      gens.push_back(e);
    }
  }
  auto I = ideal({"a", "b", "c", "d", "e", "f"}, gens);
  CHECK(depth_quotient(I, FieldSpec(32003)) == 3);
  CHECK(depth_quotient(I, FieldSpec(2)) < 3);
  CHECK(as_map(betti_table_quotient(I, FieldSpec(2))) == oracle::taylor_betti(I, 2));
}

TEST_CASE("modules U/V") {
  auto U = ideal({"x"}, {{1}});
  auto V = ideal({"x"}, {{2}});
  MonomialModule M(U, V);
  CHECK(depth_module(M) == 0);
  CHECK(regularity(M) == 1);
  CHECK_THROWS_AS(MonomialModule(V, U), HypothesisViolation);
  // (x)/(x^2) is k(-1): one generator in degree 1 and a relation in degree 2.
  const auto t = betti_table(M);
  CHECK(t.at(0, {1}) == 1);
  CHECK(t.at(1, {2}) == 1);
}

TEST_CASE("Tor maps") {
  // (x^2) -> (x): multiplication by x induces zero on Tor.
  auto V = ideal({"x", "y"}, {{2, 0}});
  auto U = ideal({"x", "y"}, {{1, 0}});
  CHECK(tor_map_is_zero(V, U));
  // (x) -> (x, y) is the identity on the generator x.
  CHECK_FALSE(tor_map_is_zero(ideal({"x", "y"}, {{1, 0}}), ideal({"x", "y"}, {{1, 0}, {0, 1}})));
  CHECK_THROWS_AS(tor_map(U, V), HypothesisViolation);
  // Unit target: only Tor_0 in degree 0, which a proper source never reaches.
  CHECK(tor_map_is_zero(V, MonomialIdeal::unit(V.ring())));
}

TEST_CASE("dstar") {
  auto I = ideal({"x", "y"}, {{2, 0}, {1, 1}});
  CHECK(to_string(dstar(I)) == "(x, y)");
}

TEST_CASE("Betti splittings") {
  // x-partition: P = (x^2, xy, y^3) with I = (x^2, xy), J = (y^3).
  auto P = ideal({"x", "y"}, {{2, 0}, {1, 1}, {0, 3}});
  auto I = ideal({"x", "y"}, {{2, 0}, {1, 1}});
  auto J = ideal({"x", "y"}, {{0, 3}});
  const auto s = betti_splitting_check(P, I, J);
  CHECK(s.equivalence_holds);
  CHECK(s.identity_holds == (s.tor_vanishing_I && s.tor_vanishing_J));
  CHECK_THROWS_AS(betti_splitting_check(P, I, ideal({"x", "y"}, {{0, 4}})), HypothesisViolation);
  // Random splittings of corpus ideals into two generator sets.
  for (const auto& K : random_ideals(31, 30)) {
    if (K.num_gens() < 2) {
      continue;
    }
    std::vector<Monomial> a(K.gens().begin(), K.gens().begin() + 1);
    std::vector<Monomial> b(K.gens().begin() + 1, K.gens().end());
    const auto r = betti_splitting_check(K, MonomialIdeal(K.ring(), a), MonomialIdeal(K.ring(), b));
    CAPTURE(to_string(K));
    CHECK(r.equivalence_holds);
    CHECK(r.identity_holds == r.multigraded_identity);
    if (r.identity_holds) {
      CHECK(r.depth_formula.value_or(false));
      CHECK(r.reg_formula.value_or(false));
    }
  }
}

}
