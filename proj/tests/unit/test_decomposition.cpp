#include <doctest.h>

#include "helpers.hpp"
#include "monideal/corpus.hpp"
#include "monideal/decomposition.hpp"
#include "monideal/homology.hpp"
#include "monideal/io.hpp"

using namespace mi;

namespace {

std::string primes_text(const std::vector<MonomialPrime>& ps) {
  std::string s;
  for (const auto& p : ps) {
    s += "(";
    for (const auto& n : p.names()) {
      s += n;
    }
    s += ")";
  }
  return s;
}

MonomialIdeal example_J() {
  return ideal({"y", "z", "t"}, {{4, 0, 0}, {3, 1, 0}, {1, 3, 0}, {0, 4, 0}, {2, 2, 1}});
}

MonomialIdeal yz_power(unsigned n) { return power(ideal({"y", "z", "t"}, {{1, 0, 0}, {0, 1, 0}}), n); }

} // namespace

TEST_SUITE("decomposition") {

TEST_CASE("irreducible components intersect back to the ideal") {
  for (const auto& I : random_ideals(11, 30)) {
    const auto comps = irreducible_decomposition(I);
    REQUIRE_FALSE(comps.empty());
    MonomialIdeal meet = comps.front().ideal();
    for (std::size_t k = 1; k < comps.size(); ++k) {
      meet = intersect(meet, comps[k].ideal());
    }
    CHECK(ideal_eq(meet, I));
    // Irredundant: dropping any component enlarges the intersection.
    for (std::size_t skip = 0; skip < comps.size() && comps.size() > 1; ++skip) {
      std::optional<MonomialIdeal> rest;
      for (std::size_t k = 0; k < comps.size(); ++k) {
        if (k != skip) {
          rest = rest ? intersect(*rest, comps[k].ideal()) : comps[k].ideal();
        }
      }
      CHECK_FALSE(ideal_eq(*rest, I));
    }
  }
}

TEST_CASE("small decompositions") {
  auto I = ideal({"x", "y"}, {{2, 0}, {1, 1}});
  const auto comps = irreducible_decomposition(I);
  REQUIRE(comps.size() == 2);
  CHECK(to_string(comps[0].ideal()) == "(x)");
  CHECK(to_string(comps[1].ideal()) == "(y, x^2)");
  CHECK(primes_text(associated_primes(I)) == "(x)(xy)");
  CHECK(primes_text(minimal_primes(I)) == "(x)");
  CHECK(height(I) == 1);
  CHECK(dim_quotient(I) == 1);
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::unit(I.ring())), ImproperInput);
}

TEST_CASE("symbolic powers of (x^2, xy)") {
  auto I = ideal({"x", "y"}, {{2, 0}, {1, 1}});
  CHECK(to_string(symbolic_power(I, 1)) == "(x)");
  CHECK(to_string(symbolic_power(I, 2)) == "(x^2)");
}

TEST_CASE("symbolic powers of (y^4, y^3z, yz^3, z^4, y^2z^2t)") {
  auto J = example_J();
  CHECK(ideal_eq(symbolic_power(J, 1), yz_power(4)));
  CHECK(ideal_eq(symbolic_power(J, 2), yz_power(8)));
  CHECK(ideal_eq(power(J, 2), yz_power(8)));
}

TEST_CASE("symbolic power properties on the corpus") {
  for (const auto& I : random_ideals(5, 20)) {
    for (unsigned n = 1; n <= 3; ++n) {
      const auto S = symbolic_power(I, n);
      CAPTURE(to_string(I));
      CAPTURE(n);
      CHECK(is_subset(power(I, n), S));
      CHECK(ideal_eq(S, symbolic_power_by_components(I, n)));
      if (n > 1) {
        CHECK(is_subset(S, symbolic_power(I, n - 1)));
        CHECK(is_subset(product(symbolic_power(I, 1), symbolic_power(I, n - 1)), S));
      }
      for (const auto& P : minimal_primes(I)) {
        CHECK(ideal_eq(localize_at(S, P.support()), localize_at(power(I, n), P.support())));
      }
      // No embedded primes in the power: nothing to remove.
      if (associated_primes(power(I, n)).size() == minimal_primes(I).size()) {
        CHECK(ideal_eq(S, power(I, n)));
      }
    }
  }
}

TEST_CASE("associated-prime test by localization matches the decomposition") {
  for (const auto& I : random_ideals(13, 20)) {
    const auto ass = associated_primes(I);
    const std::size_t n = I.ring().size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1u) {
          support.push_back(i);
        }
      }
      const MonomialPrime P(I.ring(), support);
      const bool listed = std::find(ass.begin(), ass.end(), P) != ass.end();
      CHECK(is_associated_prime(I, P) == listed);
    }
  }
}

TEST_CASE("maximal ideal is associated exactly when depth is zero") {
  for (const auto& I : random_ideals(17, 20)) {
    for (unsigned n = 1; n <= 2; ++n) {
      const auto In = power(I, n);
      std::vector<std::size_t> all(I.ring().size());
      for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
      }
      const MonomialPrime m(I.ring(), all);
      const auto ass = ass_of_power(I, n);
      const bool listed = std::find(ass.begin(), ass.end(), m) != ass.end();
      CHECK(listed == (depth_quotient(In) == 0));
    }
  }
}

TEST_CASE("Ass and Min of a sum are pairwise sums") {
  for (const auto& [I, J] : random_pairs(19, 25)) {
    const auto r = verify_ass_sum(I, J);
    CAPTURE(to_string(I));
    CAPTURE(to_string(J));
    CHECK(r.ass_pass);
    CHECK(r.min_pass);
  }
}

}
