#ifndef MONIDEAL_DEPTH_SYNTH_HPP
#define MONIDEAL_DEPTH_SYNTH_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "monideal/homology.hpp"
#include "monideal/report.hpp"
#include "monideal/ring.hpp"

namespace mi {

/// f(1), f(2), ..., then `tail` forever.
struct DepthFunctionSpec {
  std::vector<unsigned> prefix;
  unsigned tail = 0;

  unsigned at(unsigned n) const;
  /// f(1..N).
  std::vector<unsigned> values(unsigned N) const;
  std::string to_string() const;
};

DepthFunctionSpec operator+(const DepthFunctionSpec& a, const DepthFunctionSpec& b);
/// Pointwise equality as functions (trailing prefix entries equal to the tail
/// do not matter).
bool same_function(const DepthFunctionSpec& a, const DepthFunctionSpec& b);

/// Sorted in this order when folding.
enum class BlockKind { Constant1, TypeI, TypeII, Mst };

struct BlockType {
  BlockKind kind;
  unsigned d = 0;

  bool operator==(const BlockType&) const = default;
  bool operator<(const BlockType& other) const;
  DepthFunctionSpec profile() const;
  std::string to_string() const;
};

struct BlockIdeal {
  BlockType type;
  MonomialIdeal ideal;
  DepthFunctionSpec claimed_profile;
  /// Variable used when this block is glued to another one.
  std::string glue_var;
};

/// (x^{d+2}, x^{d+1}y, xy^{d+1}, y^{d+2}, x^d y^2 z): 0 (d-1 times), then 1.
BlockIdeal block_type1(unsigned d, std::string_view suffix = "");
/// (t^{d+1}, t u^{d-1} v, u^d v): 1 (d times), then 0.
BlockIdeal block_mst(unsigned d, std::string_view suffix = "");
/// (x) in k[x, w]: constant 1.
BlockIdeal block_constant1(std::string_view suffix = "");
/// A single 1 at n = d. For d >= 2 this is type I glued to MST with two
/// identifications; for d = 1 it is (t^2, tv, uv), whose profile is checked
/// for n <= max(4, verify_up_to) on every call (VerificationFailure if not).
BlockIdeal block_type2(unsigned d, std::string_view suffix = "", FieldSpec field = {},
                       unsigned verify_up_to = 4);

/// Q = I * J with y renamed to x, in the ring on vars(A) and vars(B) minus y.
MonomialIdeal glue_additive(const MonomialIdeal& I, std::string_view x, const MonomialIdeal& J,
                            std::string_view y);

/// Q = I * J with ys[k] renamed to xs[k]. The remaining variables of A (resp.
/// B) must lie in the radical of I (resp. J), and both rings need at least 3
/// variables (HypothesisViolation otherwise). Ring: vars(A) minus xs, then
/// vars(B).
MonomialIdeal glue_reduction(const MonomialIdeal& I, const std::array<std::string, 2>& xs,
                             const MonomialIdeal& J, const std::array<std::string, 2>& ys);

/// depth S/Q^n for n = 1..N.
std::vector<int> depth_profile(const MonomialIdeal& Q, unsigned N, FieldSpec field = {});

/// One constant1/type I block per unit increase of the non-decreasing minorant
/// h(n) = min_{m >= n} f(m), one type II block per unit of f - h. Sorted.
std::vector<BlockType> decompose_profile(const DepthFunctionSpec& f);

struct SynthesisOptions {
  /// Verify depth S/Q^n = f(n) for n <= N; nullopt means len(prefix) + 2, and
  /// 0 disables verification.
  std::optional<unsigned> verify_up_to;
  std::size_t max_vars = 14;
  FieldSpec field;
  /// Also compare every intermediate fold with the sum of its inputs.
  bool check_folds = true;
};

struct ProfileRow {
  unsigned n;
  unsigned expected;
  int computed;
};

struct SynthesisResult {
  MonomialIdeal Q;
  std::vector<BlockIdeal> blocks;
  /// Empty when verification is off.
  std::vector<ProfileRow> table;
  VerificationReport report;
};

/// Throws BudgetExceeded when verification is requested and the ring has more
/// than max_vars variables, VerificationFailure when a block misses its claim.
SynthesisResult synthesize_depth_ideal(const DepthFunctionSpec& f, const SynthesisOptions& options = {});

struct RatliffResult {
  DepthFunctionSpec f;
  SynthesisResult synthesis;
  /// For n <= max(gamma) + 2: m in Ass(Q^n), depth S/Q^n = 0 and n in gamma
  /// must agree. Empty when verification is off.
  VerificationReport report;
};

RatliffResult ratliff_ideal(const std::set<unsigned>& gamma, bool verify = true,
                            const SynthesisOptions& options = {});

/// Ass of Q = glue_additive(I, x, J, y) against the union of {p}, {q} and
/// {p + q : x in p, y in q}, with y identified with x.
VerificationReport verify_ass_control(const MonomialIdeal& I, std::string_view x,
                                      const MonomialIdeal& J, std::string_view y);

} // namespace mi

#endif
