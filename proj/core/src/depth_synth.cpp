#include "monideal/depth_synth.hpp"

#include <algorithm>
#include <map>

#include "monideal/decomposition.hpp"
#include "monideal/io.hpp"

namespace mi {

unsigned DepthFunctionSpec::at(unsigned n) const {
  if (n == 0) {
    throw ImproperInput("depth functions are indexed from n = 1");
  }
  return n <= prefix.size() ? prefix[n - 1] : tail;
}

std::vector<unsigned> DepthFunctionSpec::values(unsigned N) const {
  std::vector<unsigned> out;
  for (unsigned n = 1; n <= N; ++n) {
    out.push_back(at(n));
  }
  return out;
}

std::string DepthFunctionSpec::to_string() const {
  std::string s;
  for (auto v : prefix) {
    s += std::to_string(v) + ",";
  }
  return s + std::to_string(tail) + "...";
}

DepthFunctionSpec operator+(const DepthFunctionSpec& a, const DepthFunctionSpec& b) {
  DepthFunctionSpec out;
  const auto len = static_cast<unsigned>(std::max(a.prefix.size(), b.prefix.size()));
  for (unsigned n = 1; n <= len; ++n) {
    out.prefix.push_back(a.at(n) + b.at(n));
  }
  out.tail = a.tail + b.tail;
  return out;
}

bool same_function(const DepthFunctionSpec& a, const DepthFunctionSpec& b) {
  const auto len = static_cast<unsigned>(std::max(a.prefix.size(), b.prefix.size())) + 1;
  return a.values(len) == b.values(len);
}

bool BlockType::operator<(const BlockType& other) const {
  if (kind != other.kind) {
    return kind < other.kind;
  }
  return d < other.d;
}

DepthFunctionSpec BlockType::profile() const {
  DepthFunctionSpec f;
  switch (kind) {
  case BlockKind::Constant1:
    f.tail = 1;
    break;
  case BlockKind::TypeI:
    f.prefix.assign(d - 1, 0);
    f.tail = 1;
    break;
  case BlockKind::TypeII:
    f.prefix.assign(d - 1, 0);
    f.prefix.push_back(1);
    break;
  case BlockKind::Mst:
    f.prefix.assign(d, 1);
    break;
  }
  return f;
}

std::string BlockType::to_string() const {
  switch (kind) {
  case BlockKind::Constant1:
    return "constant1";
  case BlockKind::TypeI:
    return "typeI(" + std::to_string(d) + ")";
  case BlockKind::TypeII:
    return "typeII(" + std::to_string(d) + ")";
  case BlockKind::Mst:
    return "mst(" + std::to_string(d) + ")";
  }
  throw InternalError("unknown block kind");
}

namespace {

MonomialIdeal from_exponents(const PolyRing& ring, const std::vector<std::vector<Exponent>>& gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) {
    ms.emplace_back(g);
  }
  return MonomialIdeal(ring, std::move(ms));
}

PolyRing suffixed(std::initializer_list<const char*> names, std::string_view suffix) {
  std::vector<std::string> vars;
  for (const char* n : names) {
    vars.push_back(std::string(n) + std::string(suffix));
  }
  return PolyRing(std::move(vars));
}

Exponent exp_of(unsigned v) { return static_cast<Exponent>(v); }

void require_d(unsigned d, unsigned least, const char* what) {
  if (d < least) {
    throw ImproperInput(std::string(what) + " needs d >= " + std::to_string(least));
  }
}

// I * J with each pair (a, b) of variables identified. The merged variable
// keeps the A name and position when keep_a is set, the B ones otherwise.
MonomialIdeal identified_product(const MonomialIdeal& I, const MonomialIdeal& J,
                                 const std::vector<std::pair<std::string, std::string>>& pairs,
                                 bool keep_a) {
  if (!I.is_proper_nonzero() || !J.is_proper_nonzero()) {
    throw ImproperInput("gluing needs proper nonzero ideals");
  }
  const auto& A = I.ring();
  const auto& B = J.ring();
  std::map<std::string, std::string> a_map;
  std::map<std::string, std::string> b_map;
  for (const auto& [a, b] : pairs) {
    A.require(a);
    B.require(b);
    (keep_a ? b_map[b] : a_map[a]) = keep_a ? a : b;
  }
  for (const auto& v : B.vars()) {
    if (A.index_of(v) && !(b_map.count(v) && b_map[v] == v) && !(a_map.count(v) && a_map[v] == v)) {
      throw NameCollision("variable '" + v + "' occurs in both rings");
    }
  }
  std::vector<std::string> vars;
  for (const auto& v : A.vars()) {
    if (!a_map.count(v)) {
      vars.push_back(v);
    }
  }
  for (const auto& v : B.vars()) {
    if (!b_map.count(v)) {
      vars.push_back(v);
    }
  }
  const PolyRing S(vars);
  auto embed = [&](const MonomialIdeal& K, const std::map<std::string, std::string>& names) {
    std::vector<Monomial> gens;
    for (const auto& g : K.gens()) {
      Monomial m = Monomial::one(S.size());
      for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& v = K.ring().var(i);
        auto it = names.find(v);
        m[S.require(it == names.end() ? v : it->second)] += g[i];
      }
      gens.push_back(std::move(m));
    }
    return MonomialIdeal(S, std::move(gens));
  };
  return product(embed(I, a_map), embed(J, b_map));
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? "," : "") + std::to_string(v[i]);
  }
  return s;
}

std::string join_uints(const std::vector<unsigned>& v) {
  std::vector<int> w(v.begin(), v.end());
  return join_ints(w);
}

// Compare a block's computed profile with its claim for n <= N.
void require_profile(const BlockIdeal& block, unsigned N, FieldSpec field) {
  const auto computed = depth_profile(block.ideal, N, field);
  const auto claimed = block.claimed_profile.values(N);
  if (!std::equal(computed.begin(), computed.end(), claimed.begin(), claimed.end(),
                  [](int c, unsigned e) { return c == static_cast<int>(e); })) {
    throw VerificationFailure("block " + block.type.to_string() + " " + to_string(block.ideal) +
                              " has depth profile " + join_ints(computed) + ", claimed " +
                              join_uints(claimed));
  }
}

} // namespace

BlockIdeal block_type1(unsigned d, std::string_view suffix) {
  require_d(d, 2, "type I block");
  const PolyRing A = suffixed({"x", "y", "z"}, suffix);
  const Exponent e = exp_of(d);
  auto I = from_exponents(A, {{e + 2, 0, 0}, {e + 1, 1, 0}, {1, e + 1, 0}, {0, e + 2, 0}, {e, 2, 1}});
  BlockType type{BlockKind::TypeI, d};
  return {type, std::move(I), type.profile(), A.var(0)};
}

BlockIdeal block_mst(unsigned d, std::string_view suffix) {
  require_d(d, 2, "MST block");
  const PolyRing B = suffixed({"t", "u", "v"}, suffix);
  const Exponent e = exp_of(d);
  auto J = from_exponents(B, {{e + 1, 0, 0}, {1, e - 1, 1}, {0, e, 1}});
  BlockType type{BlockKind::Mst, d};
  return {type, std::move(J), type.profile(), B.var(0)};
}

BlockIdeal block_constant1(std::string_view suffix) {
  const PolyRing R = suffixed({"x", "w"}, suffix);
  BlockType type{BlockKind::Constant1, 0};
  return {type, from_exponents(R, {{1, 0}}), type.profile(), R.var(0)};
}

BlockIdeal block_type2(unsigned d, std::string_view suffix, FieldSpec field, unsigned verify_up_to) {
  require_d(d, 1, "type II block");
  BlockType type{BlockKind::TypeII, d};
  if (d == 1) {
    const PolyRing B = suffixed({"t", "u", "v"}, suffix);
    BlockIdeal block{type, from_exponents(B, {{2, 0, 0}, {1, 0, 1}, {0, 1, 1}}), type.profile(),
                     B.var(0)};
    // Found by search rather than by construction: never use it unchecked.
    require_profile(block, std::max(4u, verify_up_to), field);
    return block;
  }
  const auto I = block_type1(d, suffix);
  const auto J = block_mst(d, suffix);
  const auto& a = I.ideal.ring();
  const auto& b = J.ideal.ring();
  auto Q = glue_reduction(I.ideal, {a.var(1), a.var(2)}, J.ideal, {b.var(1), b.var(2)});
  return {type, std::move(Q), type.profile(), a.var(0)};
}

MonomialIdeal glue_additive(const MonomialIdeal& I, std::string_view x, const MonomialIdeal& J,
                            std::string_view y) {
  I.ring().require(x);
  J.ring().require(y);
  return identified_product(I, J, {{std::string(x), std::string(y)}}, true);
}

MonomialIdeal glue_reduction(const MonomialIdeal& I, const std::array<std::string, 2>& xs,
                             const MonomialIdeal& J, const std::array<std::string, 2>& ys) {
  if (I.ring().size() < 3 || J.ring().size() < 3) {
    throw HypothesisViolation("reduction gluing needs rings with at least 3 variables");
  }
  if (xs[0] == xs[1] || ys[0] == ys[1]) {
    throw HypothesisViolation("reduction gluing needs two distinct variables on each side");
  }
  auto check_radical = [](const MonomialIdeal& K, const std::array<std::string, 2>& skip) {
    if (!K.is_proper_nonzero()) {
      throw ImproperInput("gluing needs proper nonzero ideals");
    }
    for (const auto& s : skip) {
      K.ring().require(s);
    }
    const MonomialIdeal rad = radical(K);
    for (std::size_t i = 0; i < K.ring().size(); ++i) {
      const auto& v = K.ring().var(i);
      if (v != skip[0] && v != skip[1] && !rad.contains(Monomial::variable(K.ring().size(), i))) {
        throw HypothesisViolation("variable '" + v + "' is not in the radical of " + to_string(K));
      }
    }
  };
  check_radical(I, xs);
  check_radical(J, ys);
  return identified_product(I, J, {{xs[0], ys[0]}, {xs[1], ys[1]}}, false);
}

std::vector<int> depth_profile(const MonomialIdeal& Q, unsigned N, FieldSpec field) {
  std::vector<int> out;
  MonomialIdeal P = MonomialIdeal::unit(Q.ring());
  for (unsigned n = 1; n <= N; ++n) {
    P = product(P, Q);
    out.push_back(depth_quotient(P, field));
  }
  return out;
}

std::vector<BlockType> decompose_profile(const DepthFunctionSpec& f) {
  const auto L = static_cast<unsigned>(f.prefix.size());
  // h(n) for n = 1..L+1; beyond that h = f = tail.
  std::vector<unsigned> h(L + 2, 0);
  h[L + 1] = f.tail;
  for (unsigned n = L; n >= 1; --n) {
    h[n] = std::min(f.at(n), h[n + 1]);
  }
  std::vector<BlockType> out;
  for (unsigned n = 1; n <= L + 1; ++n) {
    const unsigned before = n == 1 ? 0 : h[n - 1];
    for (unsigned k = before; k < h[n]; ++k) {
      out.push_back(n == 1 ? BlockType{BlockKind::Constant1, 0} : BlockType{BlockKind::TypeI, n});
    }
    if (n <= L) {
      for (unsigned k = h[n]; k < f.at(n); ++k) {
        out.push_back({BlockKind::TypeII, n});
      }
    }
  }
  std::sort(out.begin(), out.end());
  DepthFunctionSpec total;
  for (const auto& b : out) {
    total = total + b.profile();
  }
  if (!same_function(total, f)) {
    throw InternalError("profile decomposition does not sum to " + f.to_string());
  }
  return out;
}

SynthesisResult synthesize_depth_ideal(const DepthFunctionSpec& f, const SynthesisOptions& options) {
  const unsigned N = options.verify_up_to.value_or(static_cast<unsigned>(f.prefix.size()) + 2);
  const auto types = decompose_profile(f);

  SynthesisResult result{MonomialIdeal::zero(PolyRing{"x0"}), {}, {}, {}};
  result.report.identity = "synth-depth";
  result.report.inputs_digest = digest({f.to_string()});
  result.report.characteristic = options.field.characteristic();

  if (types.empty()) {
    // f = 0: any ideal primary to the maximal ideal works.
    result.Q = from_exponents(PolyRing{"x0"}, {{1}});
  } else {
    const bool numbered = types.size() > 1;
    for (std::size_t k = 0; k < types.size(); ++k) {
      const std::string suffix = numbered ? std::to_string(k + 1) : "";
      const auto& t = types[k];
      switch (t.kind) {
      case BlockKind::Constant1:
        result.blocks.push_back(block_constant1(suffix));
        break;
      case BlockKind::TypeI:
        result.blocks.push_back(block_type1(t.d, suffix));
        break;
      case BlockKind::TypeII:
        result.blocks.push_back(block_type2(t.d, suffix, options.field, N));
        break;
      case BlockKind::Mst:
        throw InternalError("MST blocks are never produced by the decomposition");
      }
    }
    std::size_t total_vars = 0;
    for (const auto& b : result.blocks) {
      total_vars += b.ideal.ring().size();
    }
    total_vars -= result.blocks.size() - 1;
    if (N > 0 && total_vars > options.max_vars) {
      throw BudgetExceeded("synthesized ring has " + std::to_string(total_vars) +
                           " variables; the verification budget is " +
                           std::to_string(options.max_vars));
    }
    if (N > 0) {
      for (const auto& b : result.blocks) {
        require_profile(b, N, options.field);
        result.report.add("block." + b.type.to_string() + "." + b.glue_var, true,
                          join_uints(b.claimed_profile.values(N)),
                          join_uints(b.claimed_profile.values(N)));
      }
      // The reduction step needs depth A/I^n > 0 or depth B/J^n > 0 per n.
      for (const auto& t : types) {
        if (t.kind == BlockKind::TypeII && t.d >= 2) {
          const auto a = depth_profile(block_type1(t.d).ideal, N, options.field);
          const auto b = depth_profile(block_mst(t.d).ideal, N, options.field);
          bool ok = true;
          for (unsigned n = 0; n < N; ++n) {
            ok = ok && (a[n] > 0 || b[n] > 0);
          }
          result.report.add("reduction_positivity." + t.to_string(), ok, "", join_ints(a) + " | " + join_ints(b));
        }
      }
    }
    result.Q = result.blocks.front().ideal;
    DepthFunctionSpec folded = result.blocks.front().claimed_profile;
    const std::string x = result.blocks.front().glue_var;
    for (std::size_t k = 1; k < result.blocks.size(); ++k) {
      const auto& b = result.blocks[k];
      auto next = glue_additive(result.Q, x, b.ideal, b.glue_var);
      folded = folded + b.claimed_profile;
      if (N > 0 && options.check_folds && k + 1 < result.blocks.size()) {
        const auto computed = depth_profile(next, N, options.field);
        const auto expected = folded.values(N);
        result.report.add("fold." + std::to_string(k), join_ints(computed) == join_uints(expected),
                          join_uints(expected), join_ints(computed));
      }
      result.Q = std::move(next);
    }
  }

  if (N > 0) {
    const auto computed = depth_profile(result.Q, N, options.field);
    for (unsigned n = 1; n <= N; ++n) {
      result.table.push_back({n, f.at(n), computed[n - 1]});
      result.report.add("depth.n=" + std::to_string(n), computed[n - 1] == static_cast<int>(f.at(n)),
                        std::to_string(f.at(n)), std::to_string(computed[n - 1]));
    }
  }
  return result;
}

RatliffResult ratliff_ideal(const std::set<unsigned>& gamma, bool verify,
                            const SynthesisOptions& options) {
  if (gamma.empty()) {
    throw ImproperInput("the set of exponents must be nonempty");
  }
  if (*gamma.begin() == 0) {
    throw ImproperInput("exponents must be positive integers");
  }
  const unsigned top = *gamma.rbegin();
  DepthFunctionSpec f;
  f.tail = 1;
  for (unsigned n = 1; n <= top; ++n) {
    f.prefix.push_back(gamma.count(n) ? 0 : 1);
  }
  SynthesisOptions synth = options;
  if (!verify) {
    synth.verify_up_to = 0;
  } else if (!synth.verify_up_to) {
    synth.verify_up_to = top + 2;
  }
  RatliffResult out{f, synthesize_depth_ideal(f, synth), {}};
  out.report.identity = "ratliff";
  std::vector<std::string> inputs;
  for (auto g : gamma) {
    inputs.push_back(std::to_string(g));
  }
  out.report.inputs_digest = digest(inputs);
  out.report.characteristic = options.field.characteristic();
  if (verify) {
    const MonomialIdeal& Q = out.synthesis.Q;
    std::vector<std::size_t> all(Q.ring().size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      all[i] = i;
    }
    const MonomialPrime m(Q.ring(), all);
    MonomialIdeal P = MonomialIdeal::unit(Q.ring());
    for (unsigned n = 1; n <= *synth.verify_up_to; ++n) {
      P = product(P, Q);
      const bool in_gamma = gamma.count(n) > 0;
      const bool associated = is_associated_prime(P, m);
      const bool depth_zero = depth_quotient(P, options.field) == 0;
      const std::string tag = "n=" + std::to_string(n);
      out.report.add(tag + ".maximal_ideal_associated", associated == in_gamma,
                     in_gamma ? "true" : "false", associated ? "true" : "false");
      out.report.add(tag + ".depth_zero", depth_zero == in_gamma, in_gamma ? "true" : "false",
                     depth_zero ? "true" : "false");
    }
  }
  return out;
}

VerificationReport verify_ass_control(const MonomialIdeal& I, std::string_view x,
                                      const MonomialIdeal& J, std::string_view y) {
  VerificationReport report;
  report.identity = "ass-control";
  report.inputs_digest = digest({to_json(I), std::string(x), to_json(J), std::string(y)});
  const MonomialIdeal Q = glue_additive(I, x, J, y);
  const PolyRing& S = Q.ring();
  const std::size_t xi = I.ring().require(x);
  const std::size_t yi = J.ring().require(y);

  auto image = [&](const MonomialPrime& p, bool from_b) {
    std::vector<std::size_t> support;
    for (auto i : p.support()) {
      const std::string name = from_b && i == yi ? std::string(x) : p.ring().var(i);
      support.push_back(S.require(name));
    }
    return support;
  };
  const auto ass_i = associated_primes(I);
  const auto ass_j = associated_primes(J);
  std::vector<MonomialPrime> predicted;
  for (const auto& p : ass_i) {
    predicted.emplace_back(S, image(p, false));
  }
  for (const auto& q : ass_j) {
    predicted.emplace_back(S, image(q, true));
  }
  for (const auto& p : ass_i) {
    for (const auto& q : ass_j) {
      if (p.contains_var(xi) && q.contains_var(yi)) {
        auto support = image(p, false);
        const auto other = image(q, true);
        support.insert(support.end(), other.begin(), other.end());
        predicted.emplace_back(S, std::move(support));
      }
    }
  }
  std::sort(predicted.begin(), predicted.end());
  predicted.erase(std::unique(predicted.begin(), predicted.end()), predicted.end());
  const auto computed = associated_primes(Q);

  auto render = [](const std::vector<MonomialPrime>& ps) {
    std::string s;
    for (const auto& p : ps) {
      s += "(";
      const auto names = p.names();
      for (std::size_t i = 0; i < names.size(); ++i) {
        s += (i ? "," : "") + names[i];
      }
      s += ")";
    }
    return s;
  };
  auto& check = report.add("ass_equals_prediction", computed == predicted, render(predicted), render(computed));
  if (!check.pass) {
    for (const auto& p : computed) {
      if (std::find(predicted.begin(), predicted.end(), p) == predicted.end()) {
        check.witness = "unpredicted " + render({p});
        break;
      }
    }
    if (check.witness.empty()) {
      for (const auto& p : predicted) {
        if (std::find(computed.begin(), computed.end(), p) == computed.end()) {
          check.witness = "missing " + render({p});
          break;
        }
      }
    }
  }
  return report;
}

} // namespace mi
