#ifndef MI_TESTS_HELPERS_HPP
#define MI_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "monideal/ring.hpp"

inline mi::MonomialIdeal ideal(std::vector<std::string> vars,
                               std::vector<std::vector<mi::Exponent>> gens) {
  std::vector<mi::Monomial> ms;
  for (auto& g : gens) {
    ms.emplace_back(g);
  }
  return mi::MonomialIdeal(mi::PolyRing(std::move(vars)), std::move(ms));
}

#endif
