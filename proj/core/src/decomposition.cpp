#include "monideal/decomposition.hpp"

#include <algorithm>
#include <optional>

namespace mi {

MonomialPrime::MonomialPrime(PolyRing ring, std::vector<std::size_t> support)
    : ring_(std::move(ring)), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  for (auto i : support_) {
    if (i >= ring_.size()) {
      throw DimensionMismatch("prime support index out of range");
    }
  }
}

MonomialIdeal MonomialPrime::ideal() const {
  std::vector<Monomial> gens;
  for (auto i : support_) {
    gens.push_back(Monomial::variable(ring_.size(), i));
  }
  return MonomialIdeal(ring_, std::move(gens));
}

std::vector<std::string> MonomialPrime::names() const {
  std::vector<std::string> out;
  for (auto i : support_) {
    out.push_back(ring_.var(i));
  }
  return out;
}

bool MonomialPrime::contains_var(std::size_t i) const {
  return std::binary_search(support_.begin(), support_.end(), i);
}

bool MonomialPrime::is_subset_of(const MonomialPrime& other) const {
  return std::includes(other.support_.begin(), other.support_.end(), support_.begin(),
                       support_.end());
}

bool MonomialPrime::operator<(const MonomialPrime& other) const {
  if (support_.size() != other.support_.size()) {
    return support_.size() < other.support_.size();
  }
  return support_ < other.support_;
}

IrreducibleComponent::IrreducibleComponent(PolyRing ring, std::map<std::size_t, Exponent> pure_powers)
    : ring_(std::move(ring)), powers_(std::move(pure_powers)) {
  for (const auto& [i, a] : powers_) {
    if (i >= ring_.size() || a == 0) {
      throw ImproperInput("irreducible component needs positive powers of ring variables");
    }
  }
}

MonomialIdeal IrreducibleComponent::ideal() const {
  std::vector<Monomial> gens;
  for (const auto& [i, a] : powers_) {
    gens.push_back(Monomial::variable(ring_.size(), i, a));
  }
  return MonomialIdeal(ring_, std::move(gens));
}

MonomialPrime IrreducibleComponent::radical() const {
  std::vector<std::size_t> support;
  for (const auto& [i, a] : powers_) {
    support.push_back(i);
  }
  return MonomialPrime(ring_, std::move(support));
}

bool IrreducibleComponent::operator<(const IrreducibleComponent& other) const {
  if (powers_.size() != other.powers_.size()) {
    return powers_.size() < other.powers_.size();
  }
  return powers_ < other.powers_;
}

namespace {

using Powers = std::map<std::size_t, Exponent>;

void require_proper(const MonomialIdeal& I, const char* what) {
  if (!I.is_proper_nonzero()) {
    throw ImproperInput(std::string(what) + " needs a proper nonzero ideal");
  }
}

// a ⊆ b for irreducible ideals: every pure power of a lies in b.
bool contained(const Powers& a, const Powers& b) {
  for (const auto& [i, e] : a) {
    auto it = b.find(i);
    if (it == b.end() || it->second > e) {
      return false;
    }
  }
  return true;
}

class Splitter {
public:
  const std::vector<Powers>& run(const std::vector<Monomial>& gens) {
    std::vector<Exponent> key;
    for (const auto& g : gens) {
      key.insert(key.end(), g.exponents().begin(), g.exponents().end());
    }
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      return it->second;
    }
    std::vector<Powers> result;
    auto split = std::find_if(gens.begin(), gens.end(),
                              [](const Monomial& g) { return g.support().size() >= 2; });
    if (split == gens.end()) {
      Powers powers;
      for (const auto& g : gens) {
        const auto i = g.support().front();
        powers[i] = g[i];
      }
      result.push_back(std::move(powers));
    } else {
      const Monomial& m = *split;
      const std::size_t i = m.support().front();
      Monomial rest = m;
      rest[i] = 0;
      std::vector<Monomial> left = gens;
      left.push_back(Monomial::variable(m.size(), i, m[i]));
      minimalize(left);
      std::vector<Monomial> right = gens;
      right.push_back(rest);
      minimalize(right);
      result = run(left);
      const auto& other = run(right);
      result.insert(result.end(), other.begin(), other.end());
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

private:
  std::map<std::vector<Exponent>, std::vector<Powers>> memo_;
};

std::vector<MonomialPrime> inclusion_minimal(const std::vector<MonomialPrime>& primes) {
  std::vector<MonomialPrime> out;
  for (const auto& p : primes) {
    bool minimal = std::none_of(primes.begin(), primes.end(), [&](const MonomialPrime& q) {
      return !(q == p) && q.is_subset_of(p);
    });
    if (minimal) {
      out.push_back(p);
    }
  }
  return out;
}

} // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
  require_proper(I, "irreducible decomposition");
  Splitter splitter;
  std::vector<Powers> raw = splitter.run(I.gens());
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<IrreducibleComponent> out;
  for (std::size_t a = 0; a < raw.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < raw.size() && !redundant; ++b) {
      redundant = a != b && contained(raw[b], raw[a]);
    }
    if (!redundant) {
      out.emplace_back(I.ring(), raw[a]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I) {
  require_proper(I, "associated primes");
  std::vector<MonomialPrime> out;
  for (const auto& c : irreducible_decomposition(I)) {
    out.push_back(c.radical());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& I) {
  require_proper(I, "minimal primes");
  // Minimal primes only depend on the radical, whose decomposition is small.
  return inclusion_minimal(associated_primes(radical(I)));
}

bool is_associated_prime(const MonomialIdeal& I, const MonomialPrime& P) {
  require_proper(I, "associated prime test");
  require_same_ring(I.ring(), P.ring(), "associated prime test");
  if (P.support().empty()) {
    return false;
  }
  const MonomialIdeal local = localize_at(I, P.support());
  if (!local.is_proper_nonzero()) {
    return false;
  }
  return !ideal_eq(colon(local, P.ideal()), local);
}

std::size_t height(const MonomialIdeal& I) {
  const auto mins = minimal_primes(I);
  std::size_t h = mins.front().height();
  for (const auto& p : mins) {
    h = std::min(h, p.height());
  }
  return h;
}

std::size_t dim_quotient(const MonomialIdeal& I) { return I.ring().size() - height(I); }

MonomialIdeal symbolic_power(const MonomialIdeal& I, unsigned n) {
  require_proper(I, "symbolic power");
  if (n == 0) {
    throw ImproperInput("symbolic power needs n >= 1");
  }
  std::optional<MonomialIdeal> result;
  for (const auto& P : minimal_primes(I)) {
    // Localizing commutes with powers, so localize first.
    MonomialIdeal local = power(localize_at(I, P.support()), n);
    result = result ? intersect(*result, local) : local;
  }
  return *result;
}

MonomialIdeal symbolic_power_by_components(const MonomialIdeal& I, unsigned n) {
  require_proper(I, "symbolic power");
  if (n == 0) {
    throw ImproperInput("symbolic power needs n >= 1");
  }
  const auto components = irreducible_decomposition(I);
  std::optional<MonomialIdeal> result;
  for (const auto& P : minimal_primes(I)) {
    std::optional<MonomialIdeal> primary;
    for (const auto& c : components) {
      if (c.radical() == P) {
        primary = primary ? intersect(*primary, c.ideal()) : c.ideal();
      }
    }
    if (!primary) {
      throw InternalError("minimal prime without a component");
    }
    MonomialIdeal part = power(*primary, n);
    result = result ? intersect(*result, part) : part;
  }
  return *result;
}

std::vector<MonomialPrime> ass_of_power(const MonomialIdeal& I, unsigned n) {
  require_proper(I, "associated primes of a power");
  if (n == 0) {
    throw ImproperInput("power exponent must be >= 1");
  }
  return associated_primes(power(I, n));
}

AssSumReport verify_ass_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_proper(I, "ass sum");
  require_proper(J, "ass sum");
  const PolyRing R = join_rings(I.ring(), J.ring());
  const std::size_t shift = I.ring().size();
  const MonomialIdeal P = sum(extend(I, R), extend(J, R));

  AssSumReport report;
  report.computed = associated_primes(P);
  report.min_computed = minimal_primes(P);

  auto pairwise = [&](const std::vector<MonomialPrime>& ps, const std::vector<MonomialPrime>& qs) {
    std::vector<MonomialPrime> out;
    for (const auto& p : ps) {
      for (const auto& q : qs) {
        std::vector<std::size_t> support = p.support();
        for (auto j : q.support()) {
          support.push_back(j + shift);
        }
        out.emplace_back(R, std::move(support));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  report.predicted = pairwise(associated_primes(I), associated_primes(J));
  report.min_predicted = pairwise(minimal_primes(I), minimal_primes(J));
  report.ass_pass = report.computed == report.predicted;
  report.min_pass = report.min_computed == report.min_predicted;
  return report;
}

} // namespace mi
