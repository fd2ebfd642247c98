#ifndef MONIDEAL_REPORT_HPP
#define MONIDEAL_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mi {

struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string computed;
  /// Set on failure when a concrete counterexample exists.
  std::string witness;
  /// Recorded observations do not enter the overall verdict.
  bool asserted = true;
};

struct VerificationReport {
  std::string identity;
  std::string inputs_digest;
  /// 0 when no field is involved.
  std::uint32_t characteristic = 0;
  std::vector<Check> checks;
  /// Only serialized when set.
  std::optional<double> wall_clock_seconds;

  bool pass() const;
  Check& add(std::string name, bool pass, std::string expected = {}, std::string computed = {});
  void observe(std::string name, bool pass, std::string expected = {}, std::string computed = {});
  /// Appends the other report's checks, prefixing their names.
  void merge(const VerificationReport& other, std::string_view prefix);
  /// Stable JSON (fixed key order), newline-terminated.
  std::string to_json() const;
};

/// 64-bit FNV-1a over the concatenated inputs, as 16 hex digits.
std::string digest(const std::vector<std::string>& inputs);

} // namespace mi

#endif
