#ifndef MONIDEAL_RING_HPP
#define MONIDEAL_RING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monideal/error.hpp"

namespace mi {

using Exponent = std::uint32_t;

/// An ordered list of distinct variable names. Copies share storage.
class PolyRing {
public:
  PolyRing() : PolyRing(std::vector<std::string>{"x"}) {}
  explicit PolyRing(std::vector<std::string> vars);
  PolyRing(std::initializer_list<std::string> vars)
      : PolyRing(std::vector<std::string>(vars)) {}

  std::size_t size() const { return vars_->size(); }
  const std::vector<std::string>& vars() const { return *vars_; }
  const std::string& var(std::size_t i) const { return (*vars_)[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of but throws UnknownVariable.
  std::size_t require(std::string_view name) const;

  bool operator==(const PolyRing& other) const {
    return vars_ == other.vars_ || *vars_ == *other.vars_;
  }

private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

/// Concatenates the variable lists; throws NameCollision on a shared name.
PolyRing join_rings(const PolyRing& a, const PolyRing& b);

/// Exponent vector. Multiplication checks for exponent overflow.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exps) : e_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : e_(exps) {}

  static Monomial one(std::size_t nvars) {
    return Monomial(std::vector<Exponent>(nvars, 0));
  }
  static Monomial variable(std::size_t nvars, std::size_t i, Exponent power = 1);

  std::size_t size() const { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  Exponent& operator[](std::size_t i) { return e_[i]; }
  const std::vector<Exponent>& exponents() const { return e_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const;
  /// Indices with positive exponent.
  std::vector<std::size_t> support() const;
  Monomial squarefree_part() const;

  bool operator==(const Monomial&) const = default;

private:
  std::vector<Exponent> e_;
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// Exponent-wise max(a - b, 0): the generator of (a) : (b).
Monomial colon(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& a, Exponent n);

/// Graded order used for all output: lower degree first, then lexicographically
/// larger exponent vectors first (x^4 before x^3*y).
bool grlex_less(const Monomial& a, const Monomial& b);

/// A monomial ideal stored as its minimal generating set, sorted by grlex_less.
/// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
public:
  explicit MonomialIdeal(PolyRing ring) : ring_(std::move(ring)) {}
  /// Normalizes `gens` (minimal antichain, sorted).
  MonomialIdeal(PolyRing ring, std::vector<Monomial> gens);

  static MonomialIdeal zero(PolyRing ring) { return MonomialIdeal(std::move(ring)); }
  static MonomialIdeal unit(PolyRing ring);
  /// The ideal generated by all variables of the ring.
  static MonomialIdeal maximal(PolyRing ring);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t num_gens() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }
  bool is_squarefree() const;

  bool contains(const Monomial& m) const;
  /// Minimal total degree of a generator; the zero ideal has none.
  std::optional<std::uint64_t> min_degree() const;

  /// Same ring and same generators. Rings must match or RingMismatch is thrown.
  bool operator==(const MonomialIdeal& other) const;

private:
  PolyRing ring_;
  std::vector<Monomial> gens_;
};

/// The minimal antichain generating the same ideal. Throws DimensionMismatch
/// when a monomial has the wrong length.
MonomialIdeal normalize(std::vector<Monomial> gens, const PolyRing& ring);

/// Sorts and minimalizes in place (no ring checks).
void minimalize(std::vector<Monomial>& gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, unsigned n);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m);
/// Iterates colon by `b` until stable. `b` must be nonzero.
MonomialIdeal saturate(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal radical(const MonomialIdeal& a);

bool ideal_eq(const MonomialIdeal& a, const MonomialIdeal& b);
/// a ⊆ b.
bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b);

/// Re-embeds `ideal` into `to`, whose variables must include all of the ideal's.
MonomialIdeal extend(const MonomialIdeal& ideal, const PolyRing& to);
/// Sets `var` to 1 and drops it from the ring.
MonomialIdeal substitute_one(const MonomialIdeal& ideal, std::string_view var);
/// Sets every variable outside `keep` to 1, staying in the same ring.
MonomialIdeal localize_at(const MonomialIdeal& ideal, const std::vector<std::size_t>& keep);
/// Renames variables; the resulting names must stay distinct.
MonomialIdeal rename(const MonomialIdeal& ideal,
                     const std::map<std::string, std::string>& mapping);

void require_same_ring(const PolyRing& a, const PolyRing& b, std::string_view op);

} // namespace mi

#endif
