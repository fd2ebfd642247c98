#ifndef MONIDEAL_HOMOLOGY_HPP
#define MONIDEAL_HOMOLOGY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monideal/ring.hpp"

namespace mi {

/// Prime field Z/p. Construction rejects non-primes.
class FieldSpec {
public:
  FieldSpec() = default;
  explicit FieldSpec(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool operator==(const FieldSpec&) const = default;

private:
  std::uint32_t p_ = 32003;
};

/// Thrown when tables over different fields are compared.
class FieldMismatch : public Error {
public:
  using Error::Error;
};

/// A set of faces of the simplex on n vertices, each face a bitmask. Faces are
/// not required to form a simplicial complex (relative complexes K \ L are
/// stored the same way). The empty face is mask 0.
class FaceSet {
public:
  explicit FaceSet(unsigned n) : n_(n) {}
  FaceSet(unsigned n, std::vector<std::uint32_t> faces);

  unsigned vertices() const { return n_; }
  const std::vector<std::uint32_t>& faces() const { return faces_; }
  bool contains(std::uint32_t face) const;
  bool empty() const { return faces_.empty(); }
  /// Largest face size, or -1 when there are no faces at all.
  int max_face_size() const;
  bool operator==(const FaceSet&) const = default;

private:
  unsigned n_;
  std::vector<std::uint32_t> faces_; // sorted, unique
};

/// Homology of the chain complex spanned by `faces`, graded by face size
/// (entry i = homology in face size i, i = 0..n). The boundary drops one vertex
/// with the usual alternating sign and ignores faces outside the set, which is
/// the relative chain complex whenever `faces` is K \ L for complexes L ⊆ K.
/// A complex containing the empty face therefore computes reduced homology
/// shifted by one; the void set has none.
std::vector<std::uint64_t> face_homology(const FaceSet& faces, std::uint32_t p);

/// {τ ⊆ supp(b) : x^(b-τ) ∈ I}.
FaceSet upper_koszul_complex(const MonomialIdeal& I, const Monomial& b);

/// The module U/V with V ⊆ U (checked).
class MonomialModule {
public:
  MonomialModule(MonomialIdeal U, MonomialIdeal V);
  /// S/I.
  static MonomialModule quotient(const MonomialIdeal& I);
  /// I itself.
  static MonomialModule ideal(const MonomialIdeal& I);

  const PolyRing& ring() const { return U_.ring(); }
  const MonomialIdeal& U() const { return U_; }
  const MonomialIdeal& V() const { return V_; }
  bool is_zero() const { return ideal_eq(U_, V_); }

private:
  MonomialIdeal U_;
  MonomialIdeal V_;
};

using BettiKey = std::pair<unsigned, std::vector<Exponent>>;

class BettiTable {
public:
  BettiTable(FieldSpec field, unsigned nvars) : field_(field), nvars_(nvars) {}

  const FieldSpec& field() const { return field_; }
  unsigned nvars() const { return nvars_; }
  const std::map<BettiKey, std::uint64_t>& entries() const { return entries_; }
  void add(unsigned i, const std::vector<Exponent>& b, std::uint64_t count);

  std::uint64_t at(unsigned i, const std::vector<Exponent>& b) const;
  /// Sum over multidegrees of total degree j.
  std::uint64_t graded(unsigned i, std::uint64_t j) const;
  std::uint64_t total(unsigned i) const;
  /// Coarsened table: (i, j) -> count.
  std::map<std::pair<unsigned, std::uint64_t>, std::uint64_t> graded_table() const;

  /// -1 for the empty table.
  int projective_dimension() const;
  /// max(|b| - i); the table must be nonempty.
  std::int64_t regularity() const;

  /// Throws FieldMismatch when the characteristics differ.
  bool operator==(const BettiTable& other) const;

  /// Rows indexed by j - i, columns by i (the usual triangular layout).
  std::string pretty() const;

private:
  FieldSpec field_;
  unsigned nvars_;
  std::map<BettiKey, std::uint64_t> entries_;
};

/// Called once per multidegree b whose faces K^b(U) \ K^b(V) are nonempty and
/// not pruned. Faces are masks over all ring variables.
using SweepVisitor = std::function<void(const std::vector<Exponent>& b, const FaceSet& faces)>;

struct SweepOptions {
  /// Skip multidegrees whose faces cannot reach size > *floor. The pointer is
  /// re-read during the sweep so the visitor may raise the floor.
  const int* floor = nullptr;
  /// Stop as soon as *stop becomes true.
  const bool* stop = nullptr;
};

/// Enumerates every multidegree b at which the relative complex of U/V can
/// have homology. Multidegrees at which the complex is a cone over some
/// vertex (so acyclic) are skipped without being visited.
void koszul_sweep(const MonomialModule& M, const SweepVisitor& visit, SweepOptions options = {});

BettiTable betti_table(const MonomialModule& M, FieldSpec field = {});
BettiTable betti_table(const MonomialIdeal& I, FieldSpec field = {});
BettiTable betti_table_quotient(const MonomialIdeal& I, FieldSpec field = {});

/// Computed without the full table: the sweep only looks for homology above
/// the best index found so far.
unsigned projective_dimension(const MonomialModule& M, FieldSpec field = {});
int depth_module(const MonomialModule& M, FieldSpec field = {});
/// depth S/I.
int depth_quotient(const MonomialIdeal& I, FieldSpec field = {});
std::int64_t regularity(const MonomialModule& M, FieldSpec field = {});
/// reg I (as an ideal, so reg S/I + 1).
std::int64_t regularity(const MonomialIdeal& I, FieldSpec field = {});
std::int64_t regularity_quotient(const MonomialIdeal& I, FieldSpec field = {});

struct TorMapEntry {
  unsigned i;
  std::vector<Exponent> b;
  std::uint64_t source_dim; // dim Tor_i(k, V)_b
  std::uint64_t target_dim; // dim Tor_i(k, U)_b
  std::uint64_t rank;       // rank of the induced map
};

struct TorMapReport {
  bool zero = true;
  /// Every (i, b) where both sides are nonzero.
  std::vector<TorMapEntry> entries;
};

/// Induced maps Tor_i(k, V) -> Tor_i(k, U) for V ⊆ U. U may be the unit ideal.
TorMapReport tor_map(const MonomialIdeal& V, const MonomialIdeal& U, FieldSpec field = {});
bool tor_map_is_zero(const MonomialIdeal& V, const MonomialIdeal& U, FieldSpec field = {});

/// Generated by m/x for minimal generators m and variables x dividing m.
MonomialIdeal dstar(const MonomialIdeal& I);

struct SplittingReport {
  bool identity_holds = false;        // β(P) = β(I) + β(J) + β_{i-1}(I∩J), graded
  bool multigraded_identity = false;  // same identity per multidegree
  bool tor_vanishing_I = false;       // I∩J -> I
  bool tor_vanishing_J = false;       // I∩J -> J
  bool equivalence_holds = false;     // identity <=> both vanish
  std::optional<bool> depth_formula;  // only evaluated when splitting holds
  std::optional<bool> reg_formula;
  int depth_P = 0, depth_I = 0, depth_J = 0, depth_IJ = 0;
  std::int64_t reg_P = 0, reg_I = 0, reg_J = 0, reg_IJ = 0;
};

/// Requires P = I + J (HypothesisViolation otherwise) and I, J nonzero proper.
SplittingReport betti_splitting_check(const MonomialIdeal& P, const MonomialIdeal& I,
                                      const MonomialIdeal& J, FieldSpec field = {});

} // namespace mi

#endif
