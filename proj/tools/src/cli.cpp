#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "monideal/corpus.hpp"
#include "monideal/decomposition.hpp"
#include "monideal/depth_synth.hpp"
#include "monideal/filtrations.hpp"
#include "monideal/homology.hpp"
#include "monideal/io.hpp"
#include "monideal/ring.hpp"

namespace mi::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::uint32_t kDefaultChar = 32003;

struct Globals {
  std::uint32_t characteristic = kDefaultChar;
  bool json = false;
  std::uint64_t seed = 20260101;
  bool m2 = false;
  bool timing = false;
};

ordered_json ideal_json(const MonomialIdeal& I) { return ordered_json::parse(to_json(I)); }

ordered_json prime_json(const MonomialPrime& p) { return p.names(); }

std::string prime_text(const MonomialPrime& p) {
  std::string s = "(";
  const auto names = p.names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    s += (i ? ", " : "") + names[i];
  }
  return s + ")";
}

void print_ideal(std::ostream& out, const MonomialIdeal& I, const Globals& g) {
  if (g.m2) {
    out << m2_ring(I.ring(), g.characteristic) << "\n" << to_m2(I) << "\n";
  } else if (g.json) {
    out << to_json(I);
  } else {
    out << to_string(I) << "\n";
  }
}

void print_primes(std::ostream& out, const std::vector<MonomialPrime>& primes, const Globals& g) {
  if (g.json) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : primes) {
      arr.push_back(prime_json(p));
    }
    out << arr.dump() << "\n";
    return;
  }
  for (const auto& p : primes) {
    out << prime_text(p) << "\n";
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(item);
  }
  return out;
}

std::vector<unsigned> parse_uint_list(const std::string& text, const char* what) {
  std::vector<unsigned> out;
  for (const auto& item : split_list(text)) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size() || item.empty() || item[0] == '-') {
        throw std::invalid_argument(item);
      }
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::logic_error&) {
      throw ImproperInput(std::string(what) + ": '" + item + "' is not a non-negative integer");
    }
  }
  return out;
}

std::string rational_text(const Rational& r) { return r.str(); }

ordered_json betti_json(const BettiTable& t) {
  ordered_json j;
  j["characteristic"] = t.field().characteristic();
  ordered_json graded = ordered_json::array();
  for (const auto& [key, count] : t.graded_table()) {
    graded.push_back({key.first, key.second, count});
  }
  j["graded"] = graded;
  ordered_json multi = ordered_json::array();
  for (const auto& [key, count] : t.entries()) {
    ordered_json e;
    e["i"] = key.first;
    e["degree"] = key.second;
    e["count"] = count;
    multi.push_back(e);
  }
  j["multigraded"] = multi;
  j["projective_dimension"] = t.projective_dimension();
  if (!t.entries().empty()) {
    j["regularity"] = t.regularity();
  }
  return j;
}

VerificationReport from_ass_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  const auto s = verify_ass_sum(I, J);
  VerificationReport r;
  r.identity = "ass-sum";
  r.inputs_digest = digest({to_json(I), to_json(J)});
  auto render = [](const std::vector<MonomialPrime>& ps) {
    std::string text;
    for (const auto& p : ps) {
      text += prime_text(p);
    }
    return text;
  };
  r.add("ass", s.ass_pass, render(s.predicted), render(s.computed));
  r.add("min", s.min_pass, render(s.min_predicted), render(s.min_computed));
  return r;
}

struct VerifyArgs {
  std::string kind;
  std::string I_path;
  std::string J_path;
  std::string P_path;
  std::string x;
  std::string y;
  unsigned n = 1;
  std::string filtration;
  std::size_t random = 0;
};

const std::vector<std::string> kVerifyKinds = {
    "binomial",      "depth-formula",     "first-bound",      "main-equality",
    "qn-quotient",   "cm",                "equality-criterion", "linear",
    "symbolic-quotient", "tor-vanishing", "staged-splittings", "ass-sum",
    "ass-control",   "betti-splitting"};

VerificationReport verify_one(const VerifyArgs& a, const MonomialIdeal& I, const MonomialIdeal& J,
                              const std::optional<MonomialIdeal>& P, FieldSpec field) {
  std::optional<FiltrationKind> only;
  if (!a.filtration.empty()) {
    only = parse_filtration_kind(a.filtration);
  }
  const unsigned n = a.n;
  const auto& k = a.kind;
  if (k == "binomial") {
    return verify_binomial_theorem(I, J, n);
  }
  if (k == "depth-formula") {
    return verify_depth_reg_formulas(I, J, n, field);
  }
  if (k == "first-bound") {
    return verify_first_bound(I, J, n, field, only);
  }
  if (k == "main-equality") {
    return verify_main_equality(I, J, n, field);
  }
  if (k == "qn-quotient") {
    return verify_qn_quotient(I, J, n, field, only);
  }
  if (k == "cm") {
    return verify_cm_equivalences(I, J, n, field);
  }
  if (k == "equality-criterion") {
    return verify_equality_criterion(I, J, n);
  }
  if (k == "linear") {
    return verify_linear(I, J, n, field);
  }
  if (k == "symbolic-quotient") {
    return verify_symbolic_quotient(I, n, field);
  }
  if (k == "tor-vanishing") {
    return verify_tor_vanishing(I, n, field);
  }
  if (k == "staged-splittings") {
    return verify_staged_splittings(I, J, n, field);
  }
  if (k == "ass-sum") {
    return from_ass_sum(I, J);
  }
  if (k == "ass-control") {
    const std::string x = a.x.empty() ? I.ring().var(0) : a.x;
    const std::string y = a.y.empty() ? J.ring().var(0) : a.y;
    return verify_ass_control(I, x, J, y);
  }
  if (k == "betti-splitting") {
    return verify_betti_splitting(P ? *P : sum(I, J), I, J, field);
  }
  throw ImproperInput("unknown verification '" + k + "'");
}

bool needs_J(const std::string& kind) {
  return kind != "symbolic-quotient" && kind != "tor-vanishing";
}

int emit_report(std::ostream& out, const VerificationReport& r) {
  out << r.to_json();
  return r.pass() ? kOk : kFailed;
}

class Runner {
public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

private:
  FieldSpec field() const { return FieldSpec(g_.characteristic); }

  std::ostream& out_;
  std::ostream& err_;
  Globals g_;
};

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations with monomial ideals", "mi"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--char", g_.characteristic, "Field characteristic (a prime)")->capture_default_str();
  app.add_flag("--json", g_.json, "Machine-readable output");
  app.add_option("--seed", g_.seed, "Seed of the random corpus used by --random")->capture_default_str();
  app.add_flag("--m2", g_.m2, "Print ideals as Macaulay2 input");
  app.add_flag("--timing", g_.timing, "Record wall-clock time in verification reports");

  std::vector<std::string> files;
  std::string op_name;
  std::string operand;
  unsigned power_n = 0;
  unsigned sym_n = 1;
  std::string module_path;
  bool ideal_table = false;
  bool exact_squarefree = false;
  unsigned max_m = 5;
  std::string seq;
  unsigned tail = 0;
  std::optional<unsigned> verify_up_to;
  std::size_t max_vars = 14;
  std::string out_path;
  std::string set_text;
  bool ratliff_verify = false;
  VerifyArgs va;

  auto* normalize = app.add_subcommand("normalize", "Print the canonical form of an ideal file");
  normalize->add_option("file", files, "Ideal JSON")->required()->expected(1);

  auto* op = app.add_subcommand("op", "sum | product | intersect | colon | power");
  op->add_option("operation", op_name)->required()->check(
      CLI::IsMember({"sum", "product", "intersect", "colon", "power"}));
  op->add_option("file", files, "Ideal JSON")->required()->expected(1);
  op->add_option("operand", operand, "Second ideal file, or the exponent for power")->required();

  auto* decompose = app.add_subcommand("decompose", "Irreducible decomposition and primes");
  decompose->add_option("file", files)->required()->expected(1);

  auto* ass = app.add_subcommand("ass", "Associated primes");
  ass->add_option("file", files)->required()->expected(1);
  ass->add_option("--power", power_n, "Use the n-th power");

  auto* symbolic = app.add_subcommand("symbolic", "n-th symbolic power");
  symbolic->add_option("n", sym_n)->required()->check(CLI::PositiveNumber);
  symbolic->add_option("file", files)->required()->expected(1);

  auto add_module_opts = [&](CLI::App* sub) {
    sub->add_option("file", files, "Ideal JSON (U)")->required()->expected(1);
    sub->add_option("--module", module_path, "V: work with the module U/V");
  };
  auto* betti = app.add_subcommand("betti", "Multigraded Betti numbers of S/I (or U/V)");
  add_module_opts(betti);
  betti->add_flag("--ideal", ideal_table, "Table of the ideal itself instead of S/I");
  auto* depth = app.add_subcommand("depth", "depth S/I (or U/V)");
  add_module_opts(depth);
  auto* reg = app.add_subcommand("reg", "reg S/I (or U/V)");
  add_module_opts(reg);

  auto* torzero = app.add_subcommand("torzero", "Is Tor(k, V) -> Tor(k, U) zero for V in U?");
  torzero->add_option("V", files)->required()->expected(2);

  auto* verify = app.add_subcommand("verify", "Check an identity; prints a JSON report");
  verify->add_option("kind", va.kind)->required()->check(CLI::IsMember(kVerifyKinds));
  verify->add_option("--I", va.I_path, "Ideal file for the first factor");
  verify->add_option("--J", va.J_path, "Ideal file for the second factor");
  verify->add_option("--P", va.P_path, "Ideal P for betti-splitting (default I+J)");
  verify->add_option("--x", va.x, "Glue variable of I for ass-control");
  verify->add_option("--y", va.y, "Glue variable of J for ass-control");
  verify->add_option("-n", va.n, "Power")->capture_default_str();
  verify->add_option("--filtration", va.filtration, "ordinary | symbolic | saturation | integral_closure");
  verify->add_option("--random", va.random, "Run on this many seeded random pairs instead of files");

  auto* wald = app.add_subcommand("waldschmidt", "Waldschmidt constant: estimates and exact LP");
  wald->add_option("file", files)->required()->expected(1);
  wald->add_flag("--exact-squarefree", exact_squarefree, "Solve the covering LP (squarefree input)");
  wald->add_option("--max-m", max_m, "Largest m for alpha(I^(m))/m")->capture_default_str()->check(
      CLI::PositiveNumber);

  auto* synth = app.add_subcommand("synth-depth", "Build Q with depth S/Q^n = f(n)");
  synth->add_option("--seq", seq, "f(1),f(2),... before the tail")->required();
  synth->add_option("--tail", tail, "Eventual value")->required();
  synth->add_option("--verify-up-to", verify_up_to, "Check n <= N (0: no check)");
  synth->add_option("--max-vars", max_vars, "Variable budget for verification")->capture_default_str();
  synth->add_option("-o", out_path, "Write the JSON result here");

  auto* ratliff = app.add_subcommand("ratliff", "Q with m in Ass(Q^n) exactly for n in the set");
  ratliff->add_option("--set", set_text, "Comma-separated positive integers")->required();
  ratliff->add_flag("--verify", ratliff_verify, "Check n <= max + 2");
  ratliff->add_option("--max-vars", max_vars, "Variable budget for verification")->capture_default_str();
  ratliff->add_option("-o", out_path, "Write the JSON result here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? kOk : kInvalid;
  }

  const auto started = std::chrono::steady_clock::now();
  auto stamp = [&](VerificationReport& r) {
    if (g_.timing) {
      r.wall_clock_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    }
  };

  const FieldSpec F = field();

  if (normalize->parsed()) {
    const auto I = read_ideal_file(files[0]);
    if (g_.m2) {
      print_ideal(out_, I, g_);
    } else {
      out_ << to_json(I);
    }
    return kOk;
  }

  if (op->parsed()) {
    const auto I = read_ideal_file(files[0]);
    if (op_name == "power") {
      const auto n = parse_uint_list(operand, "power exponent");
      if (n.size() != 1) {
        throw ImproperInput("power needs a single exponent");
      }
      print_ideal(out_, power(I, n[0]), g_);
      return kOk;
    }
    const auto J = read_ideal_file(operand);
    MonomialIdeal R = MonomialIdeal::zero(I.ring());
    if (op_name == "sum") {
      R = sum(I, J);
    } else if (op_name == "product") {
      R = product(I, J);
    } else if (op_name == "intersect") {
      R = intersect(I, J);
    } else {
      R = colon(I, J);
    }
    print_ideal(out_, R, g_);
    return kOk;
  }

  if (decompose->parsed()) {
    const auto I = read_ideal_file(files[0]);
    const auto comps = irreducible_decomposition(I);
    const auto ass_primes = associated_primes(I);
    const auto min_primes = minimal_primes(I);
    if (g_.json) {
      ordered_json j;
      j["components"] = ordered_json::array();
      for (const auto& c : comps) {
        j["components"].push_back(ideal_json(c.ideal()));
      }
      j["associated_primes"] = ordered_json::array();
      for (const auto& p : ass_primes) {
        j["associated_primes"].push_back(prime_json(p));
      }
      j["minimal_primes"] = ordered_json::array();
      for (const auto& p : min_primes) {
        j["minimal_primes"].push_back(prime_json(p));
      }
      out_ << j.dump() << "\n";
      return kOk;
    }
    out_ << "components:\n";
    for (const auto& c : comps) {
      out_ << "  " << (g_.m2 ? to_m2(c.ideal()) : to_string(c.ideal())) << "\n";
    }
    out_ << "associated primes:\n";
    for (const auto& p : ass_primes) {
      out_ << "  " << prime_text(p) << "\n";
    }
    out_ << "minimal primes:\n";
    for (const auto& p : min_primes) {
      out_ << "  " << prime_text(p) << "\n";
    }
    return kOk;
  }

  if (ass->parsed()) {
    const auto I = read_ideal_file(files[0]);
    print_primes(out_, power_n > 0 ? ass_of_power(I, power_n) : associated_primes(I), g_);
    return kOk;
  }

  if (symbolic->parsed()) {
    print_ideal(out_, symbolic_power(read_ideal_file(files[0]), sym_n), g_);
    return kOk;
  }

  if (betti->parsed() || depth->parsed() || reg->parsed()) {
    const auto U = read_ideal_file(files[0]);
    std::optional<MonomialModule> M;
    if (!module_path.empty()) {
      M = MonomialModule(U, read_ideal_file(module_path));
    } else if (betti->parsed() && ideal_table) {
      M = MonomialModule::ideal(U);
    } else {
      M = MonomialModule::quotient(U);
    }
    // Results at the requested characteristic, and at the default one for
    // comparison when they differ.
    std::vector<FieldSpec> fields{F};
    if (F.characteristic() != kDefaultChar) {
      fields.emplace_back(kDefaultChar);
    }
    if (betti->parsed()) {
      std::vector<BettiTable> tables;
      for (auto f : fields) {
        tables.push_back(betti_table(*M, f));
      }
      const bool differs = tables.size() == 2 && tables[0].entries() != tables[1].entries();
      if (g_.json) {
        ordered_json j;
        j["tables"] = ordered_json::array();
        for (const auto& t : tables) {
          j["tables"].push_back(betti_json(t));
        }
        j["characteristic_dependent"] = differs;
        out_ << j.dump() << "\n";
      } else {
        for (const auto& t : tables) {
          out_ << "char " << t.field().characteristic() << ":\n" << t.pretty();
        }
        if (differs) {
          out_ << "tables differ between characteristics\n";
        }
      }
      return kOk;
    }
    const bool is_depth = depth->parsed();
    std::vector<std::int64_t> values;
    for (auto f : fields) {
      values.push_back(is_depth ? depth_module(*M, f) : regularity(*M, f));
    }
    const bool differs = values.size() == 2 && values[0] != values[1];
    if (g_.json) {
      ordered_json j;
      j["invariant"] = is_depth ? "depth" : "reg";
      j["values"] = ordered_json::array();
      for (std::size_t i = 0; i < fields.size(); ++i) {
        j["values"].push_back({{"characteristic", fields[i].characteristic()}, {"value", values[i]}});
      }
      j["characteristic_dependent"] = differs;
      out_ << j.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        out_ << (is_depth ? "depth" : "reg") << " = " << values[i] << " (char "
             << fields[i].characteristic() << ")\n";
      }
      if (differs) {
        out_ << "values differ between characteristics\n";
      }
    }
    return kOk;
  }

  if (torzero->parsed()) {
    const auto V = read_ideal_file(files[0]);
    const auto U = read_ideal_file(files[1]);
    const auto r = tor_map(V, U, F);
    if (g_.json) {
      ordered_json j;
      j["zero"] = r.zero;
      j["entries"] = ordered_json::array();
      for (const auto& e : r.entries) {
        j["entries"].push_back({{"i", e.i},
                                {"degree", e.b},
                                {"source_dim", e.source_dim},
                                {"target_dim", e.target_dim},
                                {"rank", e.rank}});
      }
      out_ << j.dump() << "\n";
    } else {
      out_ << (r.zero ? "zero" : "nonzero") << "\n";
      for (const auto& e : r.entries) {
        if (e.rank != 0) {
          out_ << "  i=" << e.i << " rank " << e.rank << "\n";
        }
      }
    }
    return r.zero ? kOk : kFailed;
  }

  if (verify->parsed()) {
    if (va.random > 0) {
      VerificationReport all;
      all.identity = va.kind;
      all.characteristic = F.characteristic();
      std::vector<std::string> inputs{std::to_string(g_.seed), std::to_string(va.random),
                                      std::to_string(va.n)};
      all.inputs_digest = digest(inputs);
      const auto pairs = random_pairs(g_.seed, va.random);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        all.merge(verify_one(va, pairs[k].first, pairs[k].second, std::nullopt, F),
                  "pair" + std::to_string(k) + ".");
      }
      stamp(all);
      return emit_report(out_, all);
    }
    if (va.I_path.empty() || (needs_J(va.kind) && va.J_path.empty())) {
      throw ImproperInput("verify " + va.kind + " needs --I" + (needs_J(va.kind) ? " and --J" : "") +
                          " (or --random)");
    }
    const auto I = read_ideal_file(va.I_path);
    const auto J = va.J_path.empty() ? I : read_ideal_file(va.J_path);
    std::optional<MonomialIdeal> P;
    if (!va.P_path.empty()) {
      P = read_ideal_file(va.P_path);
    }
    auto report = verify_one(va, I, J, P, F);
    stamp(report);
    return emit_report(out_, report);
  }

  if (wald->parsed()) {
    const auto I = read_ideal_file(files[0]);
    ordered_json j;
    ordered_json alphas = ordered_json::array();
    for (unsigned m = 1; m <= max_m; ++m) {
      alphas.push_back(waldschmidt_alpha(I, m));
    }
    const Rational estimate = waldschmidt_estimate(I, max_m);
    j["alpha"] = alphas;
    j["estimate"] = rational_text(estimate);
    std::optional<Rational> exact;
    if (exact_squarefree) {
      exact = waldschmidt_exact_squarefree(I);
      j["exact"] = rational_text(*exact);
    }
    if (g_.json) {
      out_ << j.dump() << "\n";
    } else {
      out_ << "alpha(I^(m)), m = 1.." << max_m << ":";
      for (const auto& a : alphas) {
        out_ << " " << a.get<std::uint64_t>();
      }
      out_ << "\nestimate = " << rational_text(estimate) << "\n";
      if (exact) {
        out_ << "exact = " << rational_text(*exact) << "\n";
      }
    }
    return kOk;
  }

  auto emit_synthesis = [&](ordered_json j, const SynthesisResult& s, const VerificationReport* extra) {
    j["ideal"] = ideal_json(s.Q);
    j["blocks"] = ordered_json::array();
    for (const auto& b : s.blocks) {
      j["blocks"].push_back({{"kind", b.type.to_string()}, {"ideal", ideal_json(b.ideal)}});
    }
    j["verification"] = ordered_json::array();
    for (const auto& row : s.table) {
      j["verification"].push_back({{"n", row.n}, {"expected", row.expected}, {"computed", row.computed}});
    }
    j["report"] = ordered_json::parse(s.report.to_json());
    bool pass = s.report.pass();
    if (extra != nullptr) {
      j["ass_report"] = ordered_json::parse(extra->to_json());
      pass = pass && extra->pass();
    }
    const std::string text = j.dump(2) + "\n";
    if (!out_path.empty()) {
      std::ofstream file(out_path);
      if (!file) {
        throw ImproperInput("cannot write '" + out_path + "'");
      }
      file << text;
    }
    if (out_path.empty() || g_.json) {
      out_ << text;
    } else {
      print_ideal(out_, s.Q, g_);
      for (const auto& b : s.blocks) {
        out_ << "block " << b.type.to_string() << ": " << to_string(b.ideal) << "\n";
      }
      for (const auto& row : s.table) {
        out_ << "n=" << row.n << " expected " << row.expected << " computed " << row.computed << "\n";
      }
    }
    return pass ? kOk : kFailed;
  };

  if (synth->parsed()) {
    DepthFunctionSpec f;
    f.prefix = seq.empty() ? std::vector<unsigned>{} : parse_uint_list(seq, "--seq");
    f.tail = tail;
    SynthesisOptions options;
    options.verify_up_to = verify_up_to;
    options.max_vars = max_vars;
    options.field = F;
    const auto s = synthesize_depth_ideal(f, options);
    ordered_json j;
    j["target"] = {{"prefix", f.prefix}, {"tail", f.tail}};
    return emit_synthesis(j, s, nullptr);
  }

  if (ratliff->parsed()) {
    const auto values = parse_uint_list(set_text, "--set");
    const std::set<unsigned> gamma(values.begin(), values.end());
    SynthesisOptions options;
    options.max_vars = max_vars;
    options.field = F;
    const auto r = ratliff_ideal(gamma, ratliff_verify, options);
    ordered_json j;
    j["set"] = gamma;
    j["target"] = {{"prefix", r.f.prefix}, {"tail", r.f.tail}};
    return emit_synthesis(j, r.synthesis, ratliff_verify ? &r.report : nullptr);
  }

  throw InternalError("no subcommand dispatched");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    Runner runner(out, err);
    return runner.run(args);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

} // namespace mi::cli
