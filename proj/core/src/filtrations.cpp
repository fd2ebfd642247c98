#include "monideal/filtrations.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "monideal/decomposition.hpp"
#include "monideal/io.hpp"

namespace mi {

std::string_view to_string(FiltrationKind kind) {
  switch (kind) {
  case FiltrationKind::Ordinary:
    return "ordinary";
  case FiltrationKind::Symbolic:
    return "symbolic";
  case FiltrationKind::Saturation:
    return "saturation";
  case FiltrationKind::IntegralClosure:
    return "integral_closure";
  }
  throw InternalError("unknown filtration kind");
}

FiltrationKind parse_filtration_kind(std::string_view name) {
  for (auto kind : {FiltrationKind::Ordinary, FiltrationKind::Symbolic, FiltrationKind::Saturation,
                    FiltrationKind::IntegralClosure}) {
    if (to_string(kind) == name) {
      return kind;
    }
  }
  throw ImproperInput("unknown filtration kind '" + std::string(name) + "'");
}

FiltrationSpec::FiltrationSpec(MonomialIdeal base, FiltrationKind kind)
    : base_(std::move(base)), kind_(kind),
      memo_(std::make_shared<std::map<unsigned, MonomialIdeal>>()) {
  if (!base_.is_proper_nonzero()) {
    throw ImproperInput("a filtration needs a proper nonzero base ideal");
  }
  if (!member(1).is_proper_nonzero()) {
    throw HypothesisViolation(std::string(to_string(kind_)) + " filtration of " +
                              to_string(base_) + " has an improper first member");
  }
}

const MonomialIdeal& FiltrationSpec::member(unsigned n) const {
  auto it = memo_->find(n);
  if (it != memo_->end()) {
    return it->second;
  }
  MonomialIdeal value = MonomialIdeal::unit(ring());
  if (n > 0) {
    switch (kind_) {
    case FiltrationKind::Ordinary:
      value = product(member(n - 1), base_);
      break;
    case FiltrationKind::Symbolic:
      value = symbolic_power(base_, n);
      break;
    case FiltrationKind::Saturation:
      value = saturate(power(base_, n), MonomialIdeal::maximal(ring()));
      break;
    case FiltrationKind::IntegralClosure:
      value = integral_closure(power(base_, n));
      break;
    }
  }
  return memo_->emplace(n, std::move(value)).first->second;
}

MonomialIdeal filtration_member(const FiltrationSpec& F, unsigned n) { return F.member(n); }

// ---------------------------------------------------------------------------
// Integral closure

bool in_newton_polyhedron(const MonomialIdeal& I, const Monomial& a) {
  if (I.is_zero()) {
    return false;
  }
  const std::size_t g = I.num_gens();
  const std::size_t n = I.ring().size();
  // lambda >= 0, sum lambda = 1, sum lambda_k gen_k <= a.
  LinearProgram lp;
  lp.num_vars = g;
  lp.objective.assign(g, 0);
  lp.constraints.push_back({std::vector<Rational>(g, 1), Relation::Equal, 1});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(g);
    for (std::size_t k = 0; k < g; ++k) {
      row[k] = I.gens()[k][i];
    }
    lp.constraints.push_back({std::move(row), Relation::LessEqual, a[i]});
  }
  return solve(lp).status == LpStatus::Optimal;
}

MonomialIdeal integral_closure(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero()) {
    return I;
  }
  const std::size_t n = I.ring().size();
  std::vector<Exponent> bound(n, 0);
  for (const auto& g : I.gens()) {
    for (std::size_t i = 0; i < n; ++i) {
      bound[i] = std::max(bound[i], g[i]);
    }
  }
  // Walk the box in an order where a - e_i precedes a. A point with some
  // a - e_i in the closure is in the closure but not a minimal generator.
  std::set<std::vector<Exponent>> closed;
  std::vector<Monomial> gens = I.gens();
  std::vector<Exponent> a(n, 0);
  for (;;) {
    bool above = false;
    for (std::size_t i = 0; i < n && !above; ++i) {
      if (a[i] > 0) {
        auto lower = a;
        --lower[i];
        above = closed.count(lower) > 0;
      }
    }
    const Monomial m(a);
    if (above || I.contains(m)) {
      closed.insert(a);
    } else if (in_newton_polyhedron(I, m)) {
      closed.insert(a);
      gens.push_back(m);
    }
    std::size_t i = 0;
    while (i < n && a[i] == bound[i]) {
      a[i] = 0;
      ++i;
    }
    if (i == n) {
      break;
    }
    ++a[i];
  }
  return MonomialIdeal(I.ring(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Binomial sums and modules

BinomialSum::BinomialSum(FiltrationSpec left, FiltrationSpec right)
    : left_(std::move(left)), right_(std::move(right)),
      ring_(join_rings(left_.ring(), right_.ring())) {}

MonomialIdeal BinomialSum::left_member(unsigned i) const { return extend(left_.member(i), ring_); }
MonomialIdeal BinomialSum::right_member(unsigned j) const { return extend(right_.member(j), ring_); }

MonomialIdeal binomial_sum(const BinomialSum& bs, unsigned n) {
  MonomialIdeal q = MonomialIdeal::zero(bs.ring());
  for (unsigned i = 0; i <= n; ++i) {
    q = sum(q, product(bs.left_member(i), bs.right_member(n - i)));
  }
  return q;
}

MonomialModule quotient_module(const BinomialSum& bs, unsigned n) {
  return MonomialModule(binomial_sum(bs, n), binomial_sum(bs, n + 1));
}

MonomialModule tensor_modules(const MonomialModule& a, const MonomialModule& b) {
  const PolyRing R = join_rings(a.ring(), b.ring());
  const auto ua = extend(a.U(), R);
  const auto va = extend(a.V(), R);
  const auto ub = extend(b.U(), R);
  const auto vb = extend(b.V(), R);
  return MonomialModule(product(ua, ub), sum(product(ua, vb), product(va, ub)));
}

std::size_t dim_module(const MonomialModule& M) {
  if (M.is_zero()) {
    throw ImproperInput("dimension of the zero module");
  }
  const MonomialIdeal ann = colon(M.V(), M.U());
  if (ann.is_zero()) {
    return M.ring().size();
  }
  return dim_quotient(ann);
}

bool is_cohen_macaulay(const MonomialModule& M, FieldSpec field) {
  return depth_module(M, field) == static_cast<int>(dim_module(M));
}

// ---------------------------------------------------------------------------
// Verification helpers

namespace {

constexpr int kInfinity = std::numeric_limits<int>::max() / 4;

std::string str(std::int64_t v) {
  if (v >= kInfinity) {
    return "inf";
  }
  if (v <= -kInfinity) {
    return "-inf";
  }
  return std::to_string(v);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

VerificationReport start(std::string identity, const std::vector<std::string>& inputs,
                         std::uint32_t characteristic) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.inputs_digest = digest(inputs);
  r.characteristic = characteristic;
  return r;
}

std::vector<std::string> pair_inputs(const MonomialIdeal& I, const MonomialIdeal& J, unsigned n) {
  return {to_json(I), to_json(J), std::to_string(n)};
}

// Depth/reg of A/F_i and F_i/F_{i+1} for one filtration, memoized. A/F_0 is
// the zero module: depth +inf, reg -inf.
class FiltrationInvariants {
public:
  FiltrationInvariants(FiltrationSpec F, FieldSpec field) : F_(std::move(F)), field_(field) {}

  const FiltrationSpec& spec() const { return F_; }

  int depth_quotient(unsigned i) {
    if (i == 0) {
      return kInfinity;
    }
    return memo(depth_q_, i, [&] { return mi::depth_quotient(F_.member(i), field_); });
  }
  std::int64_t reg_quotient(unsigned i) {
    if (i == 0) {
      return -kInfinity;
    }
    return memo(reg_q_, i, [&] { return regularity_quotient(F_.member(i), field_); });
  }
  int depth_successive(unsigned i) {
    return memo(depth_s_, i, [&] { return depth_module(successive(i), field_); });
  }
  std::int64_t reg_successive(unsigned i) {
    return memo(reg_s_, i, [&] { return regularity(successive(i), field_); });
  }
  bool cm_quotient(unsigned i) {
    return i == 0 || depth_quotient(i) == static_cast<int>(dim_quotient(F_.member(i)));
  }
  bool cm_successive(unsigned i) {
    return depth_successive(i) == static_cast<int>(dim_module(successive(i)));
  }
  MonomialModule successive(unsigned i) const { return MonomialModule(F_.member(i), F_.member(i + 1)); }

private:
  template <class T, class Fn>
  static T memo(std::map<unsigned, T>& m, unsigned i, Fn fn) {
    auto it = m.find(i);
    if (it != m.end()) {
      return it->second;
    }
    T v = fn();
    m.emplace(i, v);
    return v;
  }

  FiltrationSpec F_;
  FieldSpec field_;
  std::map<unsigned, int> depth_q_;
  std::map<unsigned, std::int64_t> reg_q_;
  std::map<unsigned, int> depth_s_;
  std::map<unsigned, std::int64_t> reg_s_;
};

std::vector<FiltrationKind> applicable_kinds(const MonomialIdeal& I, const MonomialIdeal& J,
                                             std::vector<std::string>* skipped) {
  std::vector<FiltrationKind> out;
  for (auto kind : {FiltrationKind::Ordinary, FiltrationKind::Symbolic, FiltrationKind::Saturation,
                    FiltrationKind::IntegralClosure}) {
    try {
      FiltrationSpec a(I, kind);
      FiltrationSpec b(J, kind);
      out.push_back(kind);
    } catch (const HypothesisViolation&) {
      if (skipped != nullptr) {
        skipped->emplace_back(to_string(kind));
      }
    }
  }
  return out;
}

// I + J itself; member(1) of a symbolic filtration may be larger than I.
MonomialIdeal base_sum(const BinomialSum& bs) {
  return sum(extend(bs.left().base(), bs.ring()), extend(bs.right().base(), bs.ring()));
}

std::vector<FiltrationKind> kinds_to_check(const MonomialIdeal& I, const MonomialIdeal& J,
                                           std::optional<FiltrationKind> only,
                                           std::vector<std::string>* skipped) {
  if (!only) {
    return applicable_kinds(I, J, skipped);
  }
  // Constructing the specs throws when the kind does not apply.
  FiltrationSpec a(I, *only);
  FiltrationSpec b(J, *only);
  return {*only};
}

bool tor_vanishing_kind(FiltrationKind kind) {
  return kind == FiltrationKind::Ordinary || kind == FiltrationKind::Symbolic;
}

} // namespace

VerificationReport verify_binomial_theorem(const MonomialIdeal& I, const MonomialIdeal& J,
                                           unsigned n) {
  if (n == 0) {
    throw ImproperInput("binomial theorem check needs n >= 1");
  }
  auto report = start("binomial", pair_inputs(I, J, n), 0);
  const BinomialSum bs(FiltrationSpec(I, FiltrationKind::Symbolic),
                       FiltrationSpec(J, FiltrationKind::Symbolic));
  const MonomialIdeal lhs = symbolic_power(base_sum(bs), n);
  const MonomialIdeal rhs = binomial_sum(bs, n);
  auto& check = report.add("symbolic_power_equals_binomial_sum", ideal_eq(lhs, rhs),
                           to_string(lhs), to_string(rhs));
  if (!check.pass) {
    for (const auto& g : lhs.gens()) {
      if (!rhs.contains(g)) {
        check.witness = to_string(g, lhs.ring()) + " in LHS only";
        break;
      }
    }
    if (check.witness.empty()) {
      for (const auto& g : rhs.gens()) {
        if (!lhs.contains(g)) {
          check.witness = to_string(g, rhs.ring()) + " in RHS only";
          break;
        }
      }
    }
  }
  return report;
}

VerificationReport verify_first_bound(const MonomialIdeal& I, const MonomialIdeal& J, unsigned n,
                                      FieldSpec field, std::optional<FiltrationKind> only) {
  if (n == 0) {
    throw ImproperInput("first bound needs n >= 1");
  }
  auto report = start("first-bound", pair_inputs(I, J, n), field.characteristic());
  std::vector<std::string> skipped;
  for (auto kind : kinds_to_check(I, J, only, &skipped)) {
    FiltrationInvariants a(FiltrationSpec(I, kind), field);
    FiltrationInvariants b(FiltrationSpec(J, kind), field);
    const BinomialSum bs(a.spec(), b.spec());
    const MonomialIdeal q = kind == FiltrationKind::Symbolic
                                ? symbolic_power(base_sum(bs), n)
                                : binomial_sum(bs, n);
    int depth_bound = kInfinity;
    std::int64_t reg_bound = -kInfinity;
    for (unsigned i = 1; i + 1 <= n; ++i) {
      depth_bound = std::min(depth_bound, a.depth_quotient(n - i) + b.depth_quotient(i) + 1);
      reg_bound = std::max(reg_bound, a.reg_quotient(n - i) + b.reg_quotient(i) + 1);
    }
    for (unsigned j = 1; j <= n; ++j) {
      depth_bound = std::min(depth_bound, a.depth_quotient(n - j + 1) + b.depth_quotient(j));
      reg_bound = std::max(reg_bound, a.reg_quotient(n - j + 1) + b.reg_quotient(j));
    }
    const int depth = depth_quotient(q, field);
    const std::int64_t reg = regularity_quotient(q, field);
    const std::string k(to_string(kind));
    report.add(k + ".depth_lower_bound", depth >= depth_bound, ">= " + str(depth_bound), str(depth));
    report.add(k + ".reg_upper_bound", reg <= reg_bound, "<= " + str(reg_bound), str(reg));
    if (tor_vanishing_kind(kind)) {
      report.add(k + ".depth_equality", depth == depth_bound, str(depth_bound), str(depth));
      report.add(k + ".reg_equality", reg == reg_bound, str(reg_bound), str(reg));
    } else {
      report.observe(k + ".depth_equality", depth == depth_bound, str(depth_bound), str(depth));
      report.observe(k + ".reg_equality", reg == reg_bound, str(reg_bound), str(reg));
    }
  }
  for (const auto& k : skipped) {
    report.observe(k + ".not_applicable", true, "", "first member not proper");
  }
  return report;
}

VerificationReport verify_main_equality(const MonomialIdeal& I, const MonomialIdeal& J, unsigned n,
                                        FieldSpec field) {
  if (n == 0) {
    throw ImproperInput("main equality needs n >= 1");
  }
  auto report = start("main-equality", pair_inputs(I, J, n), field.characteristic());
  FiltrationInvariants a(FiltrationSpec(I, FiltrationKind::Symbolic), field);
  FiltrationInvariants b(FiltrationSpec(J, FiltrationKind::Symbolic), field);
  const BinomialSum bs(a.spec(), b.spec());
  const MonomialIdeal P = base_sum(bs);
  const MonomialModule M(symbolic_power(P, n), symbolic_power(P, n + 1));
  int depth_rhs = kInfinity;
  std::int64_t reg_rhs = -kInfinity;
  for (unsigned i = 0; i <= n; ++i) {
    depth_rhs = std::min(depth_rhs, a.depth_successive(i) + b.depth_successive(n - i));
    reg_rhs = std::max(reg_rhs, a.reg_successive(i) + b.reg_successive(n - i));
  }
  const int depth = depth_module(M, field);
  const std::int64_t reg = regularity(M, field);
  report.add("depth", depth == depth_rhs, str(depth_rhs), str(depth));
  report.add("reg", reg == reg_rhs, str(reg_rhs), str(reg));
  return report;
}

VerificationReport verify_qn_quotient(const MonomialIdeal& I, const MonomialIdeal& J, unsigned n,
                                      FieldSpec field, std::optional<FiltrationKind> only) {
  if (n == 0) {
    throw ImproperInput("Q_n/Q_{n+1} check needs n >= 1");
  }
  auto report = start("qn-quotient", pair_inputs(I, J, n), field.characteristic());
  std::vector<std::string> skipped;
  for (auto kind : kinds_to_check(I, J, only, &skipped)) {
    FiltrationInvariants a(FiltrationSpec(I, kind), field);
    FiltrationInvariants b(FiltrationSpec(J, kind), field);
    const BinomialSum bs(a.spec(), b.spec());
    const MonomialModule M = quotient_module(bs, n);
    int depth_rhs = kInfinity;
    std::int64_t reg_rhs = -kInfinity;
    for (unsigned i = 0; i <= n; ++i) {
      depth_rhs = std::min(depth_rhs, a.depth_successive(i) + b.depth_successive(n - i));
      reg_rhs = std::max(reg_rhs, a.reg_successive(i) + b.reg_successive(n - i));
    }
    const std::string k(to_string(kind));
    const int depth = depth_module(M, field);
    const std::int64_t reg = regularity(M, field);
    report.add(k + ".depth", depth == depth_rhs, str(depth_rhs), str(depth));
    report.add(k + ".reg", reg == reg_rhs, str(reg_rhs), str(reg));
  }
  for (const auto& k : skipped) {
    report.observe(k + ".not_applicable", true, "", "first member not proper");
  }
  return report;
}

VerificationReport verify_cm_equivalences(const MonomialIdeal& I, const MonomialIdeal& J,
                                          unsigned n, FieldSpec field) {
  if (n == 0) {
    throw ImproperInput("CM equivalences need n >= 1");
  }
  auto report = start("cm", pair_inputs(I, J, n), field.characteristic());
  FiltrationInvariants a(FiltrationSpec(I, FiltrationKind::Symbolic), field);
  FiltrationInvariants b(FiltrationSpec(J, FiltrationKind::Symbolic), field);
  const BinomialSum bs(a.spec(), b.spec());
  FiltrationInvariants p(FiltrationSpec(base_sum(bs),
                                        FiltrationKind::Symbolic),
                         field);
  const bool c1 = p.cm_successive(n - 1);
  bool c2 = true;
  bool c3 = true;
  for (unsigned i = 1; i <= n; ++i) {
    c2 = c2 && p.cm_quotient(i);
    c3 = c3 && a.cm_quotient(i) && b.cm_quotient(i);
  }
  bool c4 = true;
  for (unsigned i = 0; i + 1 <= n; ++i) {
    c4 = c4 && a.cm_successive(i) && b.cm_successive(i);
  }
  const std::string verdicts = "(i)=" + yes_no(c1) + " (ii)=" + yes_no(c2) + " (iii)=" + yes_no(c3) +
                               " (iv)=" + yes_no(c4);
  report.add("i_iff_ii", c1 == c2, "", verdicts);
  report.add("ii_iff_iii", c2 == c3, "", verdicts);
  report.add("iii_iff_iv", c3 == c4, "", verdicts);
  // The dimension identity used along the way.
  const auto dim_p = dim_module(p.successive(n - 1));
  const auto dim_sum = dim_quotient(I) + dim_quotient(J);
  report.add("dimension_additivity", dim_p == dim_sum, std::to_string(dim_sum), std::to_string(dim_p));
  return report;
}

VerificationReport verify_equality_criterion(const MonomialIdeal& I, const MonomialIdeal& J,
                                             unsigned n) {
  if (n == 0) {
    throw ImproperInput("equality criterion needs n >= 1");
  }
  auto report = start("equality-criterion", pair_inputs(I, J, n), 0);
  bool hypothesis = true;
  for (unsigned t = 0; t + 1 <= n; ++t) {
    hypothesis = hypothesis && !ideal_eq(power(I, t), power(I, t + 1)) &&
                 !ideal_eq(power(J, t), power(J, t + 1));
  }
  report.add("hypothesis_powers_distinct", hypothesis);
  const BinomialSum bs(FiltrationSpec(I, FiltrationKind::Symbolic),
                       FiltrationSpec(J, FiltrationKind::Symbolic));
  const MonomialIdeal P = base_sum(bs);
  const bool lhs = ideal_eq(symbolic_power(P, n), power(P, n));
  bool rhs = true;
  for (unsigned t = 1; t <= n; ++t) {
    rhs = rhs && ideal_eq(symbolic_power(I, t), power(I, t)) &&
          ideal_eq(symbolic_power(J, t), power(J, t));
  }
  report.add("criterion", lhs == rhs, "sum equality " + yes_no(lhs), "factor equalities " + yes_no(rhs));
  return report;
}

VerificationReport verify_linear(const MonomialIdeal& I, const MonomialIdeal& J, unsigned n,
                                 FieldSpec field) {
  if (n == 0) {
    throw ImproperInput("linear check needs n >= 1");
  }
  auto report = start("linear", pair_inputs(I, J, n), field.characteristic());
  std::set<std::size_t> support;
  for (const auto& g : J.gens()) {
    for (auto i : g.support()) {
      support.insert(i);
    }
  }
  const MonomialPrime lin(J.ring(), std::vector<std::size_t>(support.begin(), support.end()));
  const MonomialIdeal L = lin.ideal();
  FiltrationInvariants a(FiltrationSpec(I, FiltrationKind::Symbolic), field);
  const PolyRing R = join_rings(I.ring(), L.ring());
  const MonomialIdeal Pn = symbolic_power(sum(extend(I, R), extend(L, R)), n);
  const int dim_b = static_cast<int>(J.ring().size() - lin.height());
  int depth_rhs = kInfinity;
  std::int64_t reg_rhs = -kInfinity;
  for (unsigned i = 1; i <= n; ++i) {
    depth_rhs = std::min(depth_rhs, a.depth_quotient(i) + dim_b);
    reg_rhs = std::max(reg_rhs, a.reg_quotient(i) - static_cast<std::int64_t>(i));
  }
  reg_rhs += n;
  const int depth = depth_quotient(Pn, field);
  const std::int64_t reg = regularity_quotient(Pn, field);
  report.add("depth", depth == depth_rhs, str(depth_rhs), str(depth));
  report.add("reg", reg == reg_rhs, str(reg_rhs), str(reg));
  return report;
}

VerificationReport verify_symbolic_quotient(const MonomialIdeal& I, unsigned n, FieldSpec field) {
  auto report = start("symbolic-quotient", {to_json(I), std::to_string(n)}, field.characteristic());
  FiltrationInvariants a(FiltrationSpec(I, FiltrationKind::Symbolic), field);
  for (unsigned m = 1; m <= n; ++m) {
    const int depth = a.depth_successive(m - 1);
    const int depth_rhs = std::min(a.depth_quotient(m - 1) == kInfinity ? kInfinity
                                                                         : a.depth_quotient(m - 1) + 1,
                                   a.depth_quotient(m));
    // reg of an ideal is reg of its quotient plus one; reg of the unit ideal is 0.
    auto reg_ideal = [&](unsigned i) -> std::int64_t { return i == 0 ? 0 : a.reg_quotient(i) + 1; };
    const std::int64_t reg = a.reg_successive(m - 1);
    const std::int64_t reg_rhs = std::max(reg_ideal(m - 1), reg_ideal(m) - 1);
    const std::string tag = "m=" + std::to_string(m);
    report.add(tag + ".depth", depth == depth_rhs, str(depth_rhs), str(depth));
    report.add(tag + ".reg", reg == reg_rhs, str(reg_rhs), str(reg));
  }
  return report;
}

VerificationReport verify_depth_reg_formulas(const MonomialIdeal& I, const MonomialIdeal& J,
                                             unsigned n, FieldSpec field) {
  auto report = start("depth-formula", pair_inputs(I, J, n), field.characteristic());
  report.merge(verify_first_bound(I, J, n, field), "first_bound.");
  report.merge(verify_main_equality(I, J, n, field), "main_equality.");
  report.merge(verify_qn_quotient(I, J, n, field), "qn_quotient.");
  report.merge(verify_cm_equivalences(I, J, n, field), "cm.");
  report.merge(verify_equality_criterion(I, J, n), "equality_criterion.");
  report.merge(verify_linear(I, J, n, field), "linear.");
  report.merge(verify_symbolic_quotient(I, n + 1, field), "symbolic_quotient.I.");
  report.merge(verify_symbolic_quotient(J, n + 1, field), "symbolic_quotient.J.");
  return report;
}

VerificationReport verify_tensor_depth_reg(const MonomialModule& a, const MonomialModule& b,
                                           FieldSpec field) {
  auto report = start("tensor",
                      {to_json(a.U()), to_json(a.V()), to_json(b.U()), to_json(b.V())},
                      field.characteristic());
  const MonomialModule t = tensor_modules(a, b);
  const int da = depth_module(a, field);
  const int db = depth_module(b, field);
  const int dt = depth_module(t, field);
  const auto ra = regularity(a, field);
  const auto rb = regularity(b, field);
  const auto rt = regularity(t, field);
  report.add("depth", dt == da + db, str(da + db), str(dt));
  report.add("reg", rt == ra + rb, str(ra + rb), str(rt));
  return report;
}

VerificationReport verify_tor_vanishing(const MonomialIdeal& I, unsigned n, FieldSpec field) {
  auto report = start("tor-vanishing", {to_json(I), std::to_string(n)}, field.characteristic());
  const FiltrationSpec F(I, FiltrationKind::Symbolic);
  for (unsigned m = 1; m <= n; ++m) {
    const std::string tag = "m=" + std::to_string(m);
    const MonomialIdeal d = dstar(F.member(m));
    report.add(tag + ".dstar_containment", is_subset(d, F.member(m - 1)));
    const auto tor = tor_map(F.member(m), F.member(m - 1), field);
    auto& check = report.add(tag + ".tor_map_zero", tor.zero);
    for (const auto& e : tor.entries) {
      if (e.rank != 0) {
        check.witness = "i=" + std::to_string(e.i) + " rank " + std::to_string(e.rank);
        break;
      }
    }
  }
  return report;
}

VerificationReport verify_betti_splitting(const MonomialIdeal& P, const MonomialIdeal& I,
                                          const MonomialIdeal& J, FieldSpec field) {
  auto report = start("betti-splitting", {to_json(P), to_json(I), to_json(J)}, field.characteristic());
  const auto s = betti_splitting_check(P, I, J, field);
  report.observe("betti_identity", s.identity_holds);
  report.observe("tor_vanishing", s.tor_vanishing_I && s.tor_vanishing_J);
  report.add("identity_iff_tor_vanishing", s.equivalence_holds);
  report.add("graded_iff_multigraded", s.identity_holds == s.multigraded_identity);
  if (s.depth_formula) {
    report.add("depth_formula", *s.depth_formula,
               str(std::min({s.depth_I, s.depth_J, s.depth_IJ - 1})), str(s.depth_P));
  }
  if (s.reg_formula) {
    report.add("reg_formula", *s.reg_formula, str(std::max({s.reg_I, s.reg_J, s.reg_IJ - 1})),
               str(s.reg_P));
  }
  return report;
}

VerificationReport verify_staged_splittings(const MonomialIdeal& I, const MonomialIdeal& J,
                                            unsigned n, FieldSpec field) {
  if (n == 0) {
    throw ImproperInput("staged splittings need n >= 1");
  }
  auto report = start("staged-splittings", pair_inputs(I, J, n), field.characteristic());
  const BinomialSum bs(FiltrationSpec(I, FiltrationKind::Symbolic),
                       FiltrationSpec(J, FiltrationKind::Symbolic));
  MonomialIdeal previous = bs.left_member(n);
  for (unsigned t = 1; t <= n; ++t) {
    const MonomialIdeal term = product(bs.left_member(n - t), bs.right_member(t));
    const MonomialIdeal next = sum(previous, term);
    const std::string tag = "t=" + std::to_string(t) + ".";
    const MonomialIdeal expected_meet = product(bs.left_member(n - t + 1), bs.right_member(t));
    report.add(tag + "intersection", ideal_eq(intersect(previous, term), expected_meet));
    const auto s = betti_splitting_check(next, previous, term, field);
    report.add(tag + "betti_identity", s.identity_holds);
    report.add(tag + "tor_vanishing", s.tor_vanishing_I && s.tor_vanishing_J);
    report.add(tag + "depth_formula", s.depth_formula.value_or(false));
    report.add(tag + "reg_formula", s.reg_formula.value_or(false));
    previous = next;
  }
  report.add("final_equals_binomial_sum", ideal_eq(previous, binomial_sum(bs, n)));
  return report;
}

// ---------------------------------------------------------------------------
// Waldschmidt

std::uint64_t waldschmidt_alpha(const MonomialIdeal& I, unsigned m) {
  return *symbolic_power(I, m).min_degree();
}

Rational waldschmidt_estimate(const MonomialIdeal& I, unsigned M) {
  if (M == 0) {
    throw ImproperInput("Waldschmidt estimate needs M >= 1");
  }
  Rational best;
  for (unsigned m = 1; m <= M; ++m) {
    Rational v(static_cast<long long>(waldschmidt_alpha(I, m)), static_cast<long long>(m));
    if (m == 1 || v < best) {
      best = v;
    }
  }
  return best;
}

LinearProgram waldschmidt_lp(const MonomialIdeal& I) {
  const std::size_t n = I.ring().size();
  LinearProgram lp;
  lp.num_vars = n;
  lp.objective.assign(n, 1);
  for (const auto& P : minimal_primes(I)) {
    std::vector<Rational> row(n, 0);
    for (auto i : P.support()) {
      row[i] = 1;
    }
    lp.constraints.push_back({std::move(row), Relation::GreaterEqual, 1});
  }
  return lp;
}

Rational waldschmidt_exact_squarefree(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero()) {
    throw ImproperInput("Waldschmidt constant needs a proper nonzero ideal");
  }
  if (!I.is_squarefree()) {
    throw ImproperInput("the exact Waldschmidt LP needs squarefree generators");
  }
  const LpResult r = solve(waldschmidt_lp(I));
  if (r.status != LpStatus::Optimal) {
    throw InternalError("Waldschmidt LP is not solvable");
  }
  return r.value;
}

} // namespace mi
