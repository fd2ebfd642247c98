#ifndef MONIDEAL_DECOMPOSITION_HPP
#define MONIDEAL_DECOMPOSITION_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "monideal/ring.hpp"

namespace mi {

/// The prime generated by a set of variables.
class MonomialPrime {
public:
  MonomialPrime(PolyRing ring, std::vector<std::size_t> support);

  const PolyRing& ring() const { return ring_; }
  /// Sorted variable indices.
  const std::vector<std::size_t>& support() const { return support_; }
  std::size_t height() const { return support_.size(); }
  MonomialIdeal ideal() const;
  std::vector<std::string> names() const;
  bool contains_var(std::size_t i) const;
  /// Support inclusion.
  bool is_subset_of(const MonomialPrime& other) const;

  bool operator==(const MonomialPrime& other) const { return support_ == other.support_; }
  /// Smaller height first, then lexicographic support.
  bool operator<(const MonomialPrime& other) const;

private:
  PolyRing ring_;
  std::vector<std::size_t> support_;
};

/// (x_{i1}^{a1}, ..., x_{ik}^{ak}).
class IrreducibleComponent {
public:
  IrreducibleComponent(PolyRing ring, std::map<std::size_t, Exponent> pure_powers);

  const PolyRing& ring() const { return ring_; }
  const std::map<std::size_t, Exponent>& pure_powers() const { return powers_; }
  MonomialIdeal ideal() const;
  MonomialPrime radical() const;

  bool operator==(const IrreducibleComponent& other) const { return powers_ == other.powers_; }
  bool operator<(const IrreducibleComponent& other) const;

private:
  PolyRing ring_;
  std::map<std::size_t, Exponent> powers_;
};

/// Irredundant, sorted. I must be proper and nonzero.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I);

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I);
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& I);
/// Test through localization: P ∈ Ass(S/I) iff (I_P : P) ≠ I_P, where I_P sets
/// the variables outside P to 1. Does not decompose I.
bool is_associated_prime(const MonomialIdeal& I, const MonomialPrime& P);

std::size_t height(const MonomialIdeal& I);
std::size_t dim_quotient(const MonomialIdeal& I);

/// Intersection over minimal primes σ of I^n with the variables outside σ set
/// to 1.
MonomialIdeal symbolic_power(const MonomialIdeal& I, unsigned n);
/// The same ideal as the intersection of n-th powers of the minimal primary
/// components (each the intersection of the irreducible components over one
/// minimal prime).
MonomialIdeal symbolic_power_by_components(const MonomialIdeal& I, unsigned n);

std::vector<MonomialPrime> ass_of_power(const MonomialIdeal& I, unsigned n);

struct AssSumReport {
  bool ass_pass = false;
  bool min_pass = false;
  std::vector<MonomialPrime> computed;
  std::vector<MonomialPrime> predicted;
  std::vector<MonomialPrime> min_computed;
  std::vector<MonomialPrime> min_predicted;
  bool pass() const { return ass_pass && min_pass; }
};

/// Ass and Min of R/(I+J) in the joined ring against pairwise sums.
AssSumReport verify_ass_sum(const MonomialIdeal& I, const MonomialIdeal& J);

} // namespace mi

#endif
