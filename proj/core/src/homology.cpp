#include "monideal/homology.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <sstream>
#include <unordered_map>

#include "monideal/linalg_modp.hpp"

namespace mi {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

} // namespace

FieldSpec::FieldSpec(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw ImproperInput("field characteristic " + std::to_string(p) + " is not prime");
  }
}

// ---------------------------------------------------------------------------
// Faces and their homology

FaceSet::FaceSet(unsigned n, std::vector<std::uint32_t> faces) : n_(n), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

bool FaceSet::contains(std::uint32_t face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face);
}

int FaceSet::max_face_size() const {
  int best = -1;
  for (auto f : faces_) {
    best = std::max(best, std::popcount(f));
  }
  return best;
}

namespace {

// Faces of each size, in increasing mask order.
std::vector<std::vector<std::uint32_t>> by_size(const FaceSet& faces) {
  std::vector<std::vector<std::uint32_t>> out(faces.vertices() + 1);
  for (auto f : faces.faces()) {
    out[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  }
  return out;
}

std::size_t index_in(const std::vector<std::uint32_t>& sorted, std::uint32_t face) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), face);
  if (it == sorted.end() || *it != face) {
    return sorted.size();
  }
  return static_cast<std::size_t>(it - sorted.begin());
}

// Rows: faces in `upper`; columns: faces in `lower`. Facets outside `lower`
// are dropped.
modp::Matrix boundary(const std::vector<std::uint32_t>& upper,
                      const std::vector<std::uint32_t>& lower, std::uint32_t p) {
  modp::Matrix m(upper.size(), lower.size());
  for (std::size_t r = 0; r < upper.size(); ++r) {
    const std::uint32_t face = upper[r];
    unsigned position = 0;
    for (std::uint32_t rest = face; rest != 0; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      const std::size_t c = index_in(lower, face & ~bit);
      if (c < lower.size()) {
        m.at(r, c) = (position % 2 == 0) ? 1 : p - 1;
      }
      ++position;
    }
  }
  return m;
}

} // namespace

std::vector<std::uint64_t> face_homology(const FaceSet& faces, std::uint32_t p) {
  const auto sized = by_size(faces);
  const std::size_t top = sized.size();
  // rank of the boundary from size i to size i-1, i = 1..n.
  std::vector<std::uint64_t> ranks(top + 1, 0);
  for (std::size_t i = 1; i < top; ++i) {
    if (sized[i].empty() || sized[i - 1].empty()) {
      continue;
    }
    ranks[i] = modp::rank(boundary(sized[i], sized[i - 1], p), p);
  }
  std::vector<std::uint64_t> h(top, 0);
  for (std::size_t i = 0; i < top; ++i) {
    h[i] = sized[i].size() - ranks[i] - ranks[i + 1];
  }
  return h;
}

FaceSet upper_koszul_complex(const MonomialIdeal& I, const Monomial& b) {
  const std::size_t n = I.ring().size();
  if (b.size() != n) {
    throw DimensionMismatch("multidegree length does not match the ring");
  }
  if (n > 31) {
    throw BudgetExceeded("upper Koszul complexes are limited to 31 variables");
  }
  std::uint32_t support = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i] > 0) {
      support |= 1U << i;
    }
  }
  std::vector<std::uint32_t> faces;
  // Enumerate subsets of the support.
  std::uint32_t tau = 0;
  while (true) {
    Monomial shifted = b;
    for (std::size_t i = 0; i < n; ++i) {
      if (tau & (1U << i)) {
        shifted[i] -= 1;
      }
    }
    if (I.contains(shifted)) {
      faces.push_back(tau);
    }
    if (tau == support) {
      break;
    }
    tau = (tau - support) & support;
  }
  return FaceSet(static_cast<unsigned>(n), std::move(faces));
}

// ---------------------------------------------------------------------------
// Modules and tables

MonomialModule::MonomialModule(MonomialIdeal U, MonomialIdeal V) : U_(std::move(U)), V_(std::move(V)) {
  require_same_ring(U_.ring(), V_.ring(), "module");
  if (!is_subset(V_, U_)) {
    throw HypothesisViolation("module U/V requires V ⊆ U");
  }
}

MonomialModule MonomialModule::quotient(const MonomialIdeal& I) {
  return MonomialModule(MonomialIdeal::unit(I.ring()), I);
}

MonomialModule MonomialModule::ideal(const MonomialIdeal& I) {
  return MonomialModule(I, MonomialIdeal::zero(I.ring()));
}

void BettiTable::add(unsigned i, const std::vector<Exponent>& b, std::uint64_t count) {
  if (count == 0) {
    return;
  }
  entries_[{i, b}] += count;
}

std::uint64_t BettiTable::at(unsigned i, const std::vector<Exponent>& b) const {
  auto it = entries_.find({i, b});
  return it == entries_.end() ? 0 : it->second;
}

namespace {

std::uint64_t total_degree(const std::vector<Exponent>& b) {
  std::uint64_t d = 0;
  for (auto e : b) {
    d += e;
  }
  return d;
}

} // namespace

std::uint64_t BettiTable::graded(unsigned i, std::uint64_t j) const {
  std::uint64_t sum = 0;
  for (const auto& [key, count] : entries_) {
    if (key.first == i && total_degree(key.second) == j) {
      sum += count;
    }
  }
  return sum;
}

std::uint64_t BettiTable::total(unsigned i) const {
  std::uint64_t sum = 0;
  for (const auto& [key, count] : entries_) {
    if (key.first == i) {
      sum += count;
    }
  }
  return sum;
}

std::map<std::pair<unsigned, std::uint64_t>, std::uint64_t> BettiTable::graded_table() const {
  std::map<std::pair<unsigned, std::uint64_t>, std::uint64_t> out;
  for (const auto& [key, count] : entries_) {
    out[{key.first, total_degree(key.second)}] += count;
  }
  return out;
}

int BettiTable::projective_dimension() const {
  int pd = -1;
  for (const auto& [key, count] : entries_) {
    pd = std::max(pd, static_cast<int>(key.first));
  }
  return pd;
}

std::int64_t BettiTable::regularity() const {
  if (entries_.empty()) {
    throw ImproperInput("regularity of the zero module");
  }
  std::int64_t reg = INT64_MIN;
  for (const auto& [key, count] : entries_) {
    reg = std::max(reg, static_cast<std::int64_t>(total_degree(key.second)) -
                            static_cast<std::int64_t>(key.first));
  }
  return reg;
}

bool BettiTable::operator==(const BettiTable& other) const {
  if (!(field_ == other.field_)) {
    throw FieldMismatch("comparing Betti tables over characteristics " +
                        std::to_string(field_.characteristic()) + " and " +
                        std::to_string(other.field_.characteristic()));
  }
  return nvars_ == other.nvars_ && entries_ == other.entries_;
}

std::string BettiTable::pretty() const {
  const auto graded = graded_table();
  std::ostringstream out;
  if (graded.empty()) {
    out << "(zero)\n";
    return out.str();
  }
  std::int64_t row_min = INT64_MAX;
  std::int64_t row_max = INT64_MIN;
  unsigned col_max = 0;
  for (const auto& [key, count] : graded) {
    const auto row = static_cast<std::int64_t>(key.second) - key.first;
    row_min = std::min(row_min, row);
    row_max = std::max(row_max, row);
    col_max = std::max(col_max, key.first);
  }
  const int width = 6;
  out << std::string(width, ' ');
  for (unsigned i = 0; i <= col_max; ++i) {
    std::string h = std::to_string(i);
    out << std::string(width - h.size(), ' ') << h;
  }
  out << '\n';
  for (std::int64_t row = row_min; row <= row_max; ++row) {
    std::string label = std::to_string(row) + ":";
    out << std::string(width - label.size(), ' ') << label;
    for (unsigned i = 0; i <= col_max; ++i) {
      auto it = graded.find({i, static_cast<std::uint64_t>(row + i)});
      std::string cell = it == graded.end() ? "." : std::to_string(it->second);
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  out << "total:";
  for (unsigned i = 0; i <= col_max; ++i) {
    std::string cell = std::to_string(total(i));
    out << std::string(width - cell.size(), ' ') << cell;
  }
  out << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// The sweep.
//
// Coordinates are fixed one at a time. A state at level k holds, for every
// tracked ideal and every τ ⊆ {0..k-1}, the ideal in the remaining variables
// {x ∈ I : x_j = b_j - τ_j for j < k}, projected to coordinates k..n-1. At the
// last level each entry is either zero or the unit ideal, and the faces of
// K^b are exactly the τ whose entry is the unit ideal.

namespace {

struct Node {
  unsigned r = 0;                 // remaining coordinates
  std::vector<Exponent> g;        // generators, stride r, lexicographically sorted
  bool unit = false;
  std::size_t count() const { return r == 0 ? 0 : g.size() / r; }
};

const Node kUnit{0, {}, true};

struct Step {
  Exponent threshold;
  const Node* child;
};

struct Steps {
  std::vector<Step> steps;
  std::vector<std::unique_ptr<Node>> owned;
};

// Builds a node from an antichain of (r)-vectors (flat).
const Node* make_node(unsigned r, std::vector<Exponent> flat, std::vector<std::unique_ptr<Node>>& owned) {
  const std::size_t count = flat.size() / r;
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(flat.begin() + a * r, flat.begin() + (a + 1) * r,
                                        flat.begin() + b * r, flat.begin() + (b + 1) * r);
  });
  auto node = std::make_unique<Node>();
  node->r = r;
  node->g.reserve(flat.size());
  for (auto i : order) {
    node->g.insert(node->g.end(), flat.begin() + i * r, flat.begin() + (i + 1) * r);
  }
  owned.push_back(std::move(node));
  return owned.back().get();
}

// Children of a node as a step function of the first coordinate value.
Steps compute_steps(const Node* node) {
  Steps out;
  if (node == nullptr) {
    return out;
  }
  if (node->unit) {
    out.steps.push_back({0, &kUnit});
    return out;
  }
  const unsigned r = node->r;
  const unsigned rr = r - 1;
  const std::size_t count = node->count();
  if (rr == 0) {
    // The first generator's exponent is the only threshold.
    out.steps.push_back({node->g[0], &kUnit});
    return out;
  }
  std::vector<Exponent> cur; // antichain, stride rr
  std::size_t i = 0;
  while (i < count) {
    const Exponent value = node->g[i * r];
    bool changed = false;
    bool reached_unit = false;
    for (; i < count && node->g[i * r] == value; ++i) {
      const Exponent* p = node->g.data() + i * r + 1;
      bool dominated = false;
      const std::size_t cur_count = cur.size() / rr;
      for (std::size_t c = 0; c < cur_count; ++c) {
        const Exponent* q = cur.data() + c * rr;
        unsigned j = 0;
        while (j < rr && q[j] <= p[j]) {
          ++j;
        }
        if (j == rr) {
          dominated = true;
          break;
        }
      }
      if (dominated) {
        continue;
      }
      // Remove elements p divides.
      std::size_t write = 0;
      for (std::size_t c = 0; c < cur_count; ++c) {
        const Exponent* q = cur.data() + c * rr;
        unsigned j = 0;
        while (j < rr && p[j] <= q[j]) {
          ++j;
        }
        if (j == rr) {
          continue;
        }
        if (write != c) {
          std::copy(q, q + rr, cur.begin() + static_cast<std::ptrdiff_t>(write * rr));
        }
        ++write;
      }
      cur.resize(write * rr);
      cur.insert(cur.end(), p, p + rr);
      changed = true;
      if (std::all_of(p, p + rr, [](Exponent e) { return e == 0; })) {
        reached_unit = true;
      }
    }
    if (reached_unit) {
      out.steps.push_back({value, &kUnit});
      break;
    }
    if (changed) {
      out.steps.push_back({value, make_node(rr, cur, out.owned)});
    }
  }
  return out;
}

const Node* child_at(const Steps& s, std::int64_t v) {
  if (v < 0 || s.steps.empty()) {
    return nullptr;
  }
  // Last step with threshold <= v.
  auto it = std::upper_bound(s.steps.begin(), s.steps.end(), static_cast<Exponent>(v),
                             [](Exponent value, const Step& st) { return value < st.threshold; });
  if (it == s.steps.begin()) {
    return nullptr;
  }
  return std::prev(it)->child;
}

const Node* root_node(const MonomialIdeal& I, std::vector<std::unique_ptr<Node>>& owned) {
  if (I.is_zero()) {
    return nullptr;
  }
  if (I.is_unit()) {
    return &kUnit;
  }
  const unsigned n = static_cast<unsigned>(I.ring().size());
  std::vector<Exponent> flat;
  for (const auto& g : I.gens()) {
    flat.insert(flat.end(), g.exponents().begin(), g.exponents().end());
  }
  return make_node(n, std::move(flat), owned);
}

using LeafVisitor = std::function<void(const std::vector<Exponent>&, const std::vector<const Node*>&)>;

// Generic sweep over `m` tracked ideals. `relative` enables the size bound
// for the module K(U) \ K(V) (ideal 0 is U, ideal 1 is V).
class Sweeper {
public:
  Sweeper(unsigned n, unsigned m, bool relative, SweepOptions options, LeafVisitor visit)
      : n_(n), m_(m), relative_(relative), options_(options), visit_(std::move(visit)), b_(n, 0) {}

  void run(const std::vector<const Node*>& roots) { recurse(0, roots); }

private:
  bool stopped() const { return options_.stop != nullptr && *options_.stop; }

  // Largest face size any completion of this state can produce.
  int reachable(unsigned k, const std::vector<const Node*>& state) const {
    const std::size_t width = std::size_t{1} << k;
    int best = -1;
    for (std::size_t tau = 0; tau < width; ++tau) {
      const Node* u = state[tau];
      if (u == nullptr) {
        continue;
      }
      if (relative_) {
        const Node* v = state[width + tau];
        if (v != nullptr && v->unit) {
          continue;
        }
      }
      best = std::max(best, std::popcount(tau));
    }
    return best < 0 ? -1 : best + static_cast<int>(n_ - k);
  }

  bool dead(unsigned k, const std::vector<const Node*>& state) const {
    const int reach = reachable(k, state);
    if (reach < 0) {
      return true;
    }
    return options_.floor != nullptr && reach <= *options_.floor;
  }

  void recurse(unsigned k, const std::vector<const Node*>& state) {
    if (stopped() || dead(k, state)) {
      return;
    }
    if (k == n_) {
      visit_(b_, state);
      return;
    }
    const std::size_t width = std::size_t{1} << k;
    // Steps for each distinct node in this state.
    std::unordered_map<const Node*, Steps> cache;
    std::vector<const Steps*> steps(state.size(), nullptr);
    std::vector<Exponent> candidates{0};
    for (std::size_t e = 0; e < state.size(); ++e) {
      auto [it, inserted] = cache.try_emplace(state[e]);
      if (inserted) {
        it->second = compute_steps(state[e]);
        for (const auto& st : it->second.steps) {
          if (st.threshold > 0) {
            candidates.push_back(st.threshold);
          }
        }
      }
      steps[e] = &it->second;
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<const Node*> child(state.size() * 2, nullptr);
    for (auto v : candidates) {
      for (unsigned ideal = 0; ideal < m_; ++ideal) {
        for (std::size_t tau = 0; tau < width; ++tau) {
          const Steps* s = steps[ideal * width + tau];
          child[ideal * 2 * width + tau] = child_at(*s, v);
          child[ideal * 2 * width + width + tau] = child_at(*s, static_cast<std::int64_t>(v) - 1);
        }
      }
      b_[k] = v;
      recurse(k + 1, child);
      if (stopped()) {
        break;
      }
    }
    b_[k] = 0;
  }

  unsigned n_;
  unsigned m_;
  bool relative_;
  SweepOptions options_;
  LeafVisitor visit_;
  std::vector<Exponent> b_;
};

void check_sweep_size(std::size_t n) {
  if (n > 24) {
    throw BudgetExceeded("homology sweeps are limited to 24 variables");
  }
}

struct FaceKeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = v.size();
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

class HomologyCache {
public:
  explicit HomologyCache(std::uint32_t p) : p_(p) {}
  const std::vector<std::uint64_t>& get(const FaceSet& faces) {
    auto it = memo_.find(faces.faces());
    if (it != memo_.end()) {
      return it->second;
    }
    return memo_.emplace(faces.faces(), face_homology(faces, p_)).first->second;
  }

private:
  std::uint32_t p_;
  std::unordered_map<std::vector<std::uint32_t>, std::vector<std::uint64_t>, FaceKeyHash> memo_;
};

} // namespace

void koszul_sweep(const MonomialModule& M, const SweepVisitor& visit, SweepOptions options) {
  const std::size_t n = M.ring().size();
  check_sweep_size(n);
  std::vector<std::unique_ptr<Node>> owned;
  std::vector<const Node*> roots{root_node(M.U(), owned), root_node(M.V(), owned)};
  std::vector<std::uint32_t> faces;
  Sweeper sweeper(static_cast<unsigned>(n), 2, true, options,
                  [&](const std::vector<Exponent>& b, const std::vector<const Node*>& leaf) {
                    const std::size_t width = std::size_t{1} << n;
                    faces.clear();
                    for (std::size_t tau = 0; tau < width; ++tau) {
                      if (leaf[tau] != nullptr && leaf[width + tau] == nullptr) {
                        faces.push_back(static_cast<std::uint32_t>(tau));
                      }
                    }
                    if (!faces.empty()) {
                      visit(b, FaceSet(static_cast<unsigned>(n), faces));
                    }
                  });
  sweeper.run(roots);
}

BettiTable betti_table(const MonomialModule& M, FieldSpec field) {
  if (M.is_zero()) {
    throw ImproperInput("Betti table of the zero module");
  }
  BettiTable table(field, static_cast<unsigned>(M.ring().size()));
  HomologyCache cache(field.characteristic());
  koszul_sweep(M, [&](const std::vector<Exponent>& b, const FaceSet& faces) {
    const auto& h = cache.get(faces);
    for (unsigned i = 0; i < h.size(); ++i) {
      table.add(i, b, h[i]);
    }
  });
  return table;
}

BettiTable betti_table(const MonomialIdeal& I, FieldSpec field) {
  if (!I.is_proper_nonzero()) {
    throw ImproperInput("Betti table needs a proper nonzero ideal");
  }
  return betti_table(MonomialModule::ideal(I), field);
}

BettiTable betti_table_quotient(const MonomialIdeal& I, FieldSpec field) {
  if (!I.is_proper_nonzero()) {
    throw ImproperInput("Betti table needs a proper nonzero ideal");
  }
  return betti_table(MonomialModule::quotient(I), field);
}

unsigned projective_dimension(const MonomialModule& M, FieldSpec field) {
  if (M.is_zero()) {
    throw ImproperInput("projective dimension of the zero module");
  }
  const int n = static_cast<int>(M.ring().size());
  int best = -1;
  bool done = false;
  HomologyCache cache(field.characteristic());
  SweepOptions options{&best, &done};
  koszul_sweep(
      M,
      [&](const std::vector<Exponent>&, const FaceSet& faces) {
        const auto& h = cache.get(faces);
        for (int i = static_cast<int>(h.size()) - 1; i > best; --i) {
          if (h[static_cast<std::size_t>(i)] != 0) {
            best = i;
            break;
          }
        }
        done = best >= n;
      },
      options);
  if (best < 0) {
    throw InternalError("nonzero module with empty Betti table");
  }
  return static_cast<unsigned>(best);
}

int depth_module(const MonomialModule& M, FieldSpec field) {
  return static_cast<int>(M.ring().size()) - static_cast<int>(projective_dimension(M, field));
}

int depth_quotient(const MonomialIdeal& I, FieldSpec field) {
  if (!I.is_proper_nonzero()) {
    throw ImproperInput("depth needs a proper nonzero ideal");
  }
  return depth_module(MonomialModule::quotient(I), field);
}

std::int64_t regularity(const MonomialModule& M, FieldSpec field) {
  return betti_table(M, field).regularity();
}

std::int64_t regularity(const MonomialIdeal& I, FieldSpec field) {
  return betti_table(I, field).regularity();
}

std::int64_t regularity_quotient(const MonomialIdeal& I, FieldSpec field) {
  return betti_table_quotient(I, field).regularity();
}

// ---------------------------------------------------------------------------
// Tor maps

namespace {

// Rank of H_i(K_V) -> H_i(K_U) where both are face sets with K_V ⊆ K_U.
std::uint64_t induced_rank(const std::vector<std::vector<std::uint32_t>>& u,
                           const std::vector<std::vector<std::uint32_t>>& v, std::size_t i,
                           std::uint32_t p) {
  const auto& chains = u[i];
  if (chains.empty() || v[i].empty()) {
    return 0;
  }
  // Cycles of V in size i: the kernel of the boundary, i.e. the nullspace of
  // the transposed boundary matrix (the identity when nothing lies below).
  const auto d = i == 0 ? modp::Matrix(v[0].size(), 0) : boundary(v[i], v[i - 1], p);
  modp::Matrix dt(d.cols(), d.rows());
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t c = 0; c < d.cols(); ++c) {
      dt.at(c, r) = d.at(r, c);
    }
  }
  const modp::Matrix zv = modp::nullspace(dt, p);
  modp::Matrix embedded(zv.rows(), chains.size());
  for (std::size_t r = 0; r < zv.rows(); ++r) {
    for (std::size_t c = 0; c < v[i].size(); ++c) {
      const std::size_t target = index_in(chains, v[i][c]);
      if (target == chains.size()) {
        throw InternalError("tor map: complexes are not nested");
      }
      embedded.at(r, target) = zv.at(r, c);
    }
  }
  modp::Matrix bu = i + 1 < u.size() ? boundary(u[i + 1], chains, p) : modp::Matrix(0, chains.size());
  const std::size_t rank_b = modp::rank(bu, p);
  modp::Matrix stacked = bu;
  for (std::size_t r = 0; r < embedded.rows(); ++r) {
    std::vector<std::uint32_t> row(chains.size());
    for (std::size_t c = 0; c < chains.size(); ++c) {
      row[c] = embedded.at(r, c);
    }
    stacked.append_row(row);
  }
  return modp::rank(stacked, p) - rank_b;
}

} // namespace

TorMapReport tor_map(const MonomialIdeal& V, const MonomialIdeal& U, FieldSpec field) {
  require_same_ring(U.ring(), V.ring(), "tor map");
  if (U.is_zero() || !V.is_proper_nonzero()) {
    throw ImproperInput("tor map needs a proper nonzero source and a nonzero target");
  }
  if (!is_subset(V, U)) {
    throw HypothesisViolation("tor map requires V ⊆ U");
  }
  const std::size_t n = U.ring().size();
  check_sweep_size(n);
  const std::uint32_t p = field.characteristic();
  TorMapReport report;
  std::vector<std::unique_ptr<Node>> owned;
  std::vector<const Node*> roots{root_node(U, owned), root_node(V, owned)};
  Sweeper sweeper(
      static_cast<unsigned>(n), 2, false, {},
      [&](const std::vector<Exponent>& b, const std::vector<const Node*>& leaf) {
        const std::size_t width = std::size_t{1} << n;
        std::vector<std::uint32_t> fu;
        std::vector<std::uint32_t> fv;
        for (std::size_t tau = 0; tau < width; ++tau) {
          if (leaf[tau] != nullptr) {
            fu.push_back(static_cast<std::uint32_t>(tau));
          }
          if (leaf[width + tau] != nullptr) {
            fv.push_back(static_cast<std::uint32_t>(tau));
          }
        }
        if (fv.empty()) {
          return;
        }
        const FaceSet ku(static_cast<unsigned>(n), fu);
        const FaceSet kv(static_cast<unsigned>(n), fv);
        const auto hu = face_homology(ku, p);
        const auto hv = face_homology(kv, p);
        const auto su = by_size(ku);
        const auto sv = by_size(kv);
        for (std::size_t i = 0; i < hu.size(); ++i) {
          if (hu[i] == 0 || hv[i] == 0) {
            continue;
          }
          const auto rank = induced_rank(su, sv, i, p);
          report.entries.push_back({static_cast<unsigned>(i), b, hv[i], hu[i], rank});
          if (rank != 0) {
            report.zero = false;
          }
        }
      });
  sweeper.run(roots);
  std::sort(report.entries.begin(), report.entries.end(),
            [](const TorMapEntry& a, const TorMapEntry& b) {
              return std::tie(a.i, a.b) < std::tie(b.i, b.b);
            });
  return report;
}

bool tor_map_is_zero(const MonomialIdeal& V, const MonomialIdeal& U, FieldSpec field) {
  return tor_map(V, U, field).zero;
}

MonomialIdeal dstar(const MonomialIdeal& I) {
  if (I.is_zero()) {
    throw ImproperInput("dstar of the zero ideal");
  }
  std::vector<Monomial> gens;
  for (const auto& g : I.gens()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > 0) {
        Monomial h = g;
        h[i] -= 1;
        gens.push_back(std::move(h));
      }
    }
  }
  if (gens.empty()) {
    // I is the unit ideal; nothing is divisible by a variable.
    return MonomialIdeal::zero(I.ring());
  }
  return MonomialIdeal(I.ring(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Betti splittings

SplittingReport betti_splitting_check(const MonomialIdeal& P, const MonomialIdeal& I,
                                      const MonomialIdeal& J, FieldSpec field) {
  require_same_ring(P.ring(), I.ring(), "betti splitting");
  require_same_ring(P.ring(), J.ring(), "betti splitting");
  if (!ideal_eq(P, sum(I, J))) {
    throw HypothesisViolation("betti splitting: P is not I + J");
  }
  if (!I.is_proper_nonzero() || !J.is_proper_nonzero()) {
    throw ImproperInput("betti splitting needs proper nonzero summands");
  }
  const MonomialIdeal IJ = intersect(I, J);
  const auto bp = betti_table(P, field);
  const auto bi = betti_table(I, field);
  const auto bj = betti_table(J, field);
  const auto bij = betti_table(IJ, field);

  SplittingReport report;
  {
    BettiTable predicted(field, bp.nvars());
    for (const auto& [key, count] : bi.entries()) {
      predicted.add(key.first, key.second, count);
    }
    for (const auto& [key, count] : bj.entries()) {
      predicted.add(key.first, key.second, count);
    }
    for (const auto& [key, count] : bij.entries()) {
      predicted.add(key.first + 1, key.second, count);
    }
    report.multigraded_identity = predicted == bp;
    report.identity_holds = predicted.graded_table() == bp.graded_table();
  }
  report.tor_vanishing_I = tor_map_is_zero(IJ, I, field);
  report.tor_vanishing_J = tor_map_is_zero(IJ, J, field);
  const bool vanishing = report.tor_vanishing_I && report.tor_vanishing_J;
  report.equivalence_holds = vanishing == report.identity_holds;

  auto quotient_depth = [&](const BettiTable& ideal_table) {
    // pd S/I = pd I + 1.
    return static_cast<int>(ideal_table.nvars()) - (ideal_table.projective_dimension() + 1);
  };
  auto quotient_reg = [](const BettiTable& ideal_table) { return ideal_table.regularity() - 1; };
  report.depth_P = quotient_depth(bp);
  report.depth_I = quotient_depth(bi);
  report.depth_J = quotient_depth(bj);
  report.depth_IJ = quotient_depth(bij);
  report.reg_P = quotient_reg(bp);
  report.reg_I = quotient_reg(bi);
  report.reg_J = quotient_reg(bj);
  report.reg_IJ = quotient_reg(bij);
  if (report.identity_holds) {
    report.depth_formula =
        report.depth_P == std::min({report.depth_I, report.depth_J, report.depth_IJ - 1});
    report.reg_formula =
        report.reg_P == std::max({report.reg_I, report.reg_J, report.reg_IJ - 1});
  }
  return report;
}

} // namespace mi
