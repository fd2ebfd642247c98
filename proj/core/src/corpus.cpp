#include "monideal/corpus.hpp"

#include <random>

namespace mi {

namespace {

class Draw {
public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  // Uniform enough for corpus purposes; exact reproducibility is what matters.
  unsigned below(unsigned n) { return static_cast<unsigned>(rng_() % n); }

private:
  std::mt19937_64 rng_;
};

MonomialIdeal draw_ideal(Draw& draw, const std::vector<std::string>& names, const CorpusLimits& limits) {
  // One-variable rings only produce principal ideals; start at two.
  const unsigned most = std::min<unsigned>(limits.max_vars, names.size());
  const unsigned least = std::min(2u, most);
  const unsigned nvars = least + draw.below(most - least + 1);
  const PolyRing ring(std::vector<std::string>(names.begin(), names.begin() + nvars));
  const Exponent top = limits.squarefree ? 1 : limits.max_exponent;
  for (;;) {
    const unsigned ngens = 1 + draw.below(limits.max_gens);
    std::vector<Monomial> gens;
    for (unsigned k = 0; k < ngens; ++k) {
      Monomial m = Monomial::one(nvars);
      for (unsigned i = 0; i < nvars; ++i) {
        m[i] = draw.below(top + 1);
      }
      gens.push_back(std::move(m));
    }
    MonomialIdeal I(ring, std::move(gens));
    if (I.is_proper_nonzero()) {
      return I;
    }
  }
}

} // namespace

std::vector<std::pair<MonomialIdeal, MonomialIdeal>> random_pairs(std::uint64_t seed, std::size_t count,
                                                                  const CorpusLimits& limits) {
  Draw draw(seed);
  std::vector<std::pair<MonomialIdeal, MonomialIdeal>> out;
  for (std::size_t k = 0; k < count; ++k) {
    auto I = draw_ideal(draw, {"x", "y", "z"}, limits);
    auto J = draw_ideal(draw, {"u", "v", "w"}, limits);
    out.emplace_back(std::move(I), std::move(J));
  }
  return out;
}

std::vector<MonomialIdeal> random_ideals(std::uint64_t seed, std::size_t count, const CorpusLimits& limits) {
  std::vector<MonomialIdeal> out;
  const auto pairs = random_pairs(seed, count, limits);
  for (const auto& p : pairs) {
    out.push_back(p.first);
  }
  for (const auto& p : pairs) {
    out.push_back(p.second);
  }
  return out;
}

} // namespace mi
