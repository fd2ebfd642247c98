#ifndef MONIDEAL_FILTRATIONS_HPP
#define MONIDEAL_FILTRATIONS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monideal/homology.hpp"
#include "monideal/lp.hpp"
#include "monideal/report.hpp"
#include "monideal/ring.hpp"

namespace mi {

enum class FiltrationKind { Ordinary, Symbolic, Saturation, IntegralClosure };

std::string_view to_string(FiltrationKind kind);
/// ordinary | symbolic | saturation | integral_closure
FiltrationKind parse_filtration_kind(std::string_view name);

/// n -> I_n for one of the standard filtrations of a proper nonzero ideal.
/// Members are memoized; copies share the memo.
class FiltrationSpec {
public:
  /// Throws HypothesisViolation if member(1) is not proper and nonzero (a
  /// saturation of an ideal primary to the maximal ideal, for instance).
  FiltrationSpec(MonomialIdeal base, FiltrationKind kind);

  const MonomialIdeal& base() const { return base_; }
  FiltrationKind kind() const { return kind_; }
  const PolyRing& ring() const { return base_.ring(); }
  const MonomialIdeal& member(unsigned n) const;

private:
  MonomialIdeal base_;
  FiltrationKind kind_;
  std::shared_ptr<std::map<unsigned, MonomialIdeal>> memo_;
};

MonomialIdeal filtration_member(const FiltrationSpec& F, unsigned n);

/// Generators of the integral closure: the exponents in the box bounded by the
/// largest generator exponents that lie in the Newton polyhedron
/// conv(exponents) + R^n_{>=0}, tested by exact LP feasibility.
MonomialIdeal integral_closure(const MonomialIdeal& I);
/// Newton-polyhedron membership of a single exponent vector.
bool in_newton_polyhedron(const MonomialIdeal& I, const Monomial& a);

/// Q_n = sum over i+j=n of I_i J_j in the joined ring.
class BinomialSum {
public:
  /// Throws NameCollision when the rings share a variable.
  BinomialSum(FiltrationSpec left, FiltrationSpec right);

  const FiltrationSpec& left() const { return left_; }
  const FiltrationSpec& right() const { return right_; }
  const PolyRing& ring() const { return ring_; }

  /// Members extended to the joined ring.
  MonomialIdeal left_member(unsigned i) const;
  MonomialIdeal right_member(unsigned j) const;

private:
  FiltrationSpec left_;
  FiltrationSpec right_;
  PolyRing ring_;
};

MonomialIdeal binomial_sum(const BinomialSum& bs, unsigned n);
/// Q_n / Q_{n+1}.
MonomialModule quotient_module(const BinomialSum& bs, unsigned n);

/// (U/V) ⊗_k (U'/V') over disjoint rings, realized as UU' / (UV' + VU').
MonomialModule tensor_modules(const MonomialModule& a, const MonomialModule& b);

/// dim S/ann(U/V) = n - height(V : U). Throws on the zero module.
std::size_t dim_module(const MonomialModule& M);
bool is_cohen_macaulay(const MonomialModule& M, FieldSpec field = {});

// Verifications. Each returns a report with one check per identity; nothing
// throws on a failed identity.

VerificationReport verify_binomial_theorem(const MonomialIdeal& I, const MonomialIdeal& J,
                                           unsigned n);
/// Depth and reg of R/(I+J)^(n) against the symbolic-power formula, both as
/// inequality and as equality; plus the bound for the other filtration kinds.
/// `only` restricts the check to one filtration kind (HypothesisViolation if
/// that kind does not apply to I or J).
VerificationReport verify_first_bound(const MonomialIdeal& I, const MonomialIdeal& J, unsigned n,
                                      FieldSpec field = {},
                                      std::optional<FiltrationKind> only = std::nullopt);
VerificationReport verify_main_equality(const MonomialIdeal& I, const MonomialIdeal& J, unsigned n,
                                        FieldSpec field = {});
/// Depth and reg of Q_n/Q_{n+1} for every applicable filtration kind.
VerificationReport verify_qn_quotient(const MonomialIdeal& I, const MonomialIdeal& J, unsigned n,
                                      FieldSpec field = {},
                                      std::optional<FiltrationKind> only = std::nullopt);
VerificationReport verify_cm_equivalences(const MonomialIdeal& I, const MonomialIdeal& J,
                                          unsigned n, FieldSpec field = {});
VerificationReport verify_equality_criterion(const MonomialIdeal& I, const MonomialIdeal& J,
                                             unsigned n);
/// Uses the prime generated by the support of J in place of J.
VerificationReport verify_linear(const MonomialIdeal& I, const MonomialIdeal& J, unsigned n,
                                 FieldSpec field = {});
/// depth and reg of I^(m-1)/I^(m) for m = 1..n against the Tor-vanishing formulas.
VerificationReport verify_symbolic_quotient(const MonomialIdeal& I, unsigned n,
                                            FieldSpec field = {});
/// All of the above (except the binomial theorem itself).
VerificationReport verify_depth_reg_formulas(const MonomialIdeal& I, const MonomialIdeal& J,
                                             unsigned n, FieldSpec field = {});
VerificationReport verify_tensor_depth_reg(const MonomialModule& a, const MonomialModule& b,
                                           FieldSpec field = {});
/// dstar containment and Tor-vanishing of I^(m) ⊆ I^(m-1), m = 1..n.
VerificationReport verify_tor_vanishing(const MonomialIdeal& I, unsigned n, FieldSpec field = {});
/// P_{n,t} = P_{n,t-1} + I^(n-t) J^(t), t = 1..n, are Betti splittings.
VerificationReport verify_staged_splittings(const MonomialIdeal& I, const MonomialIdeal& J,
                                            unsigned n, FieldSpec field = {});
VerificationReport verify_betti_splitting(const MonomialIdeal& P, const MonomialIdeal& I,
                                          const MonomialIdeal& J, FieldSpec field = {});

// Waldschmidt constant.

/// Least degree of a generator of I^(m).
std::uint64_t waldschmidt_alpha(const MonomialIdeal& I, unsigned m);
/// min over 1 <= m <= M of alpha(I^(m))/m.
Rational waldschmidt_estimate(const MonomialIdeal& I, unsigned M);
/// Optimum of min sum z subject to z >= 0 and sum_{i in P} z_i >= 1 for each
/// minimal prime P. Squarefree input only.
Rational waldschmidt_exact_squarefree(const MonomialIdeal& I);
/// The covering LP itself, for inspection.
LinearProgram waldschmidt_lp(const MonomialIdeal& I);

} // namespace mi

#endif
