#ifndef MONIDEAL_CORPUS_HPP
#define MONIDEAL_CORPUS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "monideal/ring.hpp"

namespace mi {

struct CorpusLimits {
  unsigned max_vars = 3;
  unsigned max_gens = 4;
  Exponent max_exponent = 4;
  bool squarefree = false;
};

/// Proper nonzero ideals over rings named {x,y,z} (left) and {u,v,w} (right)
/// with at least two variables each,
/// drawn from mt19937_64 with plain modulo reduction so the sequence does not
/// depend on the standard library's distributions.
std::vector<std::pair<MonomialIdeal, MonomialIdeal>> random_pairs(std::uint64_t seed, std::size_t count,
                                                                  const CorpusLimits& limits = {});

/// The left ideals of random_pairs followed by the right ones.
std::vector<MonomialIdeal> random_ideals(std::uint64_t seed, std::size_t count,
                                         const CorpusLimits& limits = {});

} // namespace mi

#endif
