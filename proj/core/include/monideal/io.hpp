#ifndef MONIDEAL_IO_HPP
#define MONIDEAL_IO_HPP

#include <string>
#include <string_view>

#include "monideal/ring.hpp"

namespace mi {

/// Parses {"ring": {"vars": [...]}, "gens": [[...], ...]}. Generators are
/// normalized. Syntax errors report the byte offset.
MonomialIdeal parse_ideal_json(std::string_view text);
MonomialIdeal read_ideal_file(const std::string& path);

/// The canonical single-line form, newline-terminated:
/// {"ring": {"vars": ["x","y"]}, "gens": [[2,0],[1,1]]}
std::string to_json(const MonomialIdeal& I);
void write_ideal_file(const MonomialIdeal& I, const std::string& path);

/// x^3*y, or 1.
std::string to_string(const Monomial& m, const PolyRing& ring);
/// (x^2, x*y); the zero ideal is (0).
std::string to_string(const MonomialIdeal& I);
/// Macaulay2 input: ideal(x^2, x*y), ideal(0_R) for the zero ideal.
std::string to_m2(const MonomialIdeal& I);
/// R = ZZ/p[x,y]
std::string m2_ring(const PolyRing& ring, std::uint32_t characteristic);

} // namespace mi

#endif
