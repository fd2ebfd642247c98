#include "monideal/ring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_set>

namespace mi {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) {
    throw Error("exponent overflow");
  }
  return a + b;
}

} // namespace

PolyRing::PolyRing(std::vector<std::string> vars) {
  if (vars.empty()) {
    throw Error("a polynomial ring needs at least one variable");
  }
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) {
      throw Error("variable names must be non-empty");
    }
    if (!seen.insert(v).second) {
      throw NameCollision("duplicate variable name '" + v + "'");
    }
  }
  vars_ = std::make_shared<const std::vector<std::string>>(std::move(vars));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if ((*vars_)[i] == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::size_t PolyRing::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) {
    throw UnknownVariable("unknown variable '" + std::string(name) + "'");
  }
  return *i;
}

PolyRing join_rings(const PolyRing& a, const PolyRing& b) {
  std::vector<std::string> vars = a.vars();
  for (const auto& v : b.vars()) {
    if (a.index_of(v)) {
      throw NameCollision("variable '" + v + "' occurs in both rings");
    }
    vars.push_back(v);
  }
  return PolyRing(std::move(vars));
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, Exponent power) {
  Monomial m = one(nvars);
  m.e_[i] = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) {
      return false;
    }
  }
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > 0) {
      out.push_back(i);
    }
  }
  return out;
}

Monomial Monomial::squarefree_part() const {
  Monomial m = *this;
  for (auto& x : m.e_) {
    x = x > 0 ? 1 : 0;
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m[i] = checked_add(a[i], b[i]);
  }
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m[i] = std::max(a[i], b[i]);
  }
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m[i] = std::min(a[i], b[i]);
  }
  return m;
}

Monomial colon(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  }
  return m;
}

Monomial pow(const Monomial& a, Exponent n) {
  Monomial m = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t v = std::uint64_t{a[i]} * n;
    if (v > std::numeric_limits<Exponent>::max()) {
      throw Error("exponent overflow");
    }
    m[i] = static_cast<Exponent>(v);
  }
  return m;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  auto da = a.degree();
  auto db = b.degree();
  if (da != db) {
    return da < db;
  }
  return a.exponents() > b.exponents();
}

void minimalize(std::vector<Monomial>& gens) {
  if (gens.size() < 2) {
    return;
  }
  std::vector<std::pair<std::uint64_t, Monomial>> keyed;
  keyed.reserve(gens.size());
  for (auto& g : gens) {
    keyed.emplace_back(g.degree(), std::move(g));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) {
      return a.first < b.first;
    }
    return a.second.exponents() > b.second.exponents();
  });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.second == b.second; }),
              keyed.end());

  // Divisors of a generator have strictly smaller degree once duplicates are
  // gone, so checking the kept prefix suffices.
  std::vector<Monomial> kept;
  kept.reserve(keyed.size());
  const std::size_t n = keyed.front().second.size();
  for (auto& [deg, m] : keyed) {
    const Exponent* me = m.exponents().data();
    bool dominated = false;
    for (const auto& k : kept) {
      const Exponent* ke = k.exponents().data();
      std::size_t i = 0;
      while (i < n && ke[i] <= me[i]) {
        ++i;
      }
      if (i == n) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      kept.push_back(std::move(m));
    }
  }
  gens = std::move(kept);
}

MonomialIdeal::MonomialIdeal(PolyRing ring, std::vector<Monomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  for (const auto& g : gens_) {
    if (g.size() != ring_.size()) {
      throw DimensionMismatch("monomial has " + std::to_string(g.size()) +
                              " exponents but the ring has " +
                              std::to_string(ring_.size()) + " variables");
    }
  }
  minimalize(gens_);
}

MonomialIdeal MonomialIdeal::unit(PolyRing ring) {
  auto n = ring.size();
  return MonomialIdeal(std::move(ring), {Monomial::one(n)});
}

MonomialIdeal MonomialIdeal::maximal(PolyRing ring) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    gens.push_back(Monomial::variable(ring.size(), i));
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.size() != ring_.size()) {
    throw DimensionMismatch("monomial length does not match the ring");
  }
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

std::optional<std::uint64_t> MonomialIdeal::min_degree() const {
  if (gens_.empty()) {
    return std::nullopt;
  }
  return gens_.front().degree();
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  require_same_ring(ring_, other.ring_, "ideal equality");
  return gens_ == other.gens_;
}

void require_same_ring(const PolyRing& a, const PolyRing& b, std::string_view op) {
  if (!(a == b)) {
    throw RingMismatch(std::string(op) + ": ideals live in different rings");
  }
}

MonomialIdeal normalize(std::vector<Monomial> gens, const PolyRing& ring) {
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "sum");
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "product");
  std::vector<Monomial> gens;
  gens.reserve(a.num_gens() * b.num_gens());
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) {
      gens.push_back(g * h);
    }
  }
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, unsigned n) {
  MonomialIdeal result = MonomialIdeal::unit(a.ring());
  for (unsigned k = 0; k < n; ++k) {
    result = product(result, a);
  }
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "intersect");
  // Pairwise lcms, except that a generator already in the other ideal is kept
  // as is: it divides every lcm it would take part in, and the lcm of g with a
  // generator h in both ideals is a multiple of h.
  std::vector<Monomial> gens;
  std::vector<const Monomial*> only_a;
  std::vector<const Monomial*> only_b;
  for (const auto& g : a.gens()) {
    if (b.contains(g)) {
      gens.push_back(g);
    } else {
      only_a.push_back(&g);
    }
  }
  for (const auto& h : b.gens()) {
    if (a.contains(h)) {
      gens.push_back(h);
    } else {
      only_b.push_back(&h);
    }
  }
  gens.reserve(gens.size() + only_a.size() * only_b.size());
  for (const auto* g : only_a) {
    for (const auto* h : only_b) {
      gens.push_back(lcm(*g, *h));
    }
  }
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(a.num_gens());
  for (const auto& g : a.gens()) {
    gens.push_back(colon(g, m));
  }
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "colon");
  MonomialIdeal result = MonomialIdeal::unit(a.ring());
  for (const auto& m : b.gens()) {
    result = intersect(result, colon(a, m));
    if (result == a) {
      // Nothing below a can appear: every a : m contains a.
      break;
    }
  }
  return result;
}

MonomialIdeal saturate(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "saturate");
  if (b.is_zero()) {
    throw ImproperInput("saturation by the zero ideal");
  }
  MonomialIdeal current = a;
  for (;;) {
    MonomialIdeal next = colon(current, b);
    if (next == current) {
      return current;
    }
    current = std::move(next);
  }
}

MonomialIdeal radical(const MonomialIdeal& a) {
  std::vector<Monomial> gens;
  gens.reserve(a.num_gens());
  for (const auto& g : a.gens()) {
    gens.push_back(g.squarefree_part());
  }
  return MonomialIdeal(a.ring(), std::move(gens));
}

bool ideal_eq(const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; }

bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "containment");
  return std::all_of(a.gens().begin(), a.gens().end(),
                     [&](const Monomial& g) { return b.contains(g); });
}

MonomialIdeal extend(const MonomialIdeal& ideal, const PolyRing& to) {
  const auto& from = ideal.ring();
  std::vector<std::size_t> where(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto j = to.index_of(from.var(i));
    if (!j) {
      throw UnknownVariable("cannot extend: variable '" + from.var(i) +
                            "' is missing from the target ring");
    }
    where[i] = *j;
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.num_gens());
  for (const auto& g : ideal.gens()) {
    Monomial m = Monomial::one(to.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
      m[where[i]] = g[i];
    }
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(to, std::move(gens));
}

MonomialIdeal substitute_one(const MonomialIdeal& ideal, std::string_view var) {
  const auto& ring = ideal.ring();
  std::size_t drop = ring.require(var);
  if (ring.size() == 1) {
    throw ImproperInput("cannot drop the only variable of a ring");
  }
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (i != drop) {
      vars.push_back(ring.var(i));
    }
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.num_gens());
  for (const auto& g : ideal.gens()) {
    std::vector<Exponent> e;
    e.reserve(ring.size() - 1);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (i != drop) {
        e.push_back(g[i]);
      }
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(PolyRing(std::move(vars)), std::move(gens));
}

MonomialIdeal localize_at(const MonomialIdeal& ideal, const std::vector<std::size_t>& keep) {
  std::vector<bool> kept(ideal.ring().size(), false);
  for (auto i : keep) {
    kept.at(i) = true;
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.num_gens());
  for (const auto& g : ideal.gens()) {
    Monomial m = g;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!kept[i]) {
        m[i] = 0;
      }
    }
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal rename(const MonomialIdeal& ideal,
                     const std::map<std::string, std::string>& mapping) {
  const auto& ring = ideal.ring();
  for (const auto& [from, to] : mapping) {
    ring.require(from);
  }
  std::vector<std::string> vars;
  for (const auto& v : ring.vars()) {
    auto it = mapping.find(v);
    vars.push_back(it == mapping.end() ? v : it->second);
  }
  // PolyRing rejects duplicates, which is exactly a non-injective renaming.
  PolyRing renamed(std::move(vars));
  return MonomialIdeal(renamed, ideal.gens());
}

} // namespace mi
