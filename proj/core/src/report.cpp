#include "monideal/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace mi {

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return !c.asserted || c.pass; });
}

Check& VerificationReport::add(std::string name, bool ok, std::string expected, std::string computed) {
  checks.push_back({std::move(name), ok, std::move(expected), std::move(computed), {}, true});
  return checks.back();
}

void VerificationReport::observe(std::string name, bool ok, std::string expected,
                                 std::string computed) {
  checks.push_back({std::move(name), ok, std::move(expected), std::move(computed), {}, false});
}

void VerificationReport::merge(const VerificationReport& other, std::string_view prefix) {
  for (auto c : other.checks) {
    c.name = std::string(prefix) + c.name;
    checks.push_back(std::move(c));
  }
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json out;
  out["identity"] = identity;
  out["inputs_digest"] = inputs_digest;
  if (characteristic != 0) {
    out["characteristic"] = characteristic;
  }
  out["pass"] = pass();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (!c.asserted) {
      j["asserted"] = false;
    }
    if (!c.expected.empty()) {
      j["expected"] = c.expected;
    }
    if (!c.computed.empty()) {
      j["computed"] = c.computed;
    }
    if (!c.witness.empty()) {
      j["witness"] = c.witness;
    }
    arr.push_back(std::move(j));
  }
  out["checks"] = std::move(arr);
  if (wall_clock_seconds) {
    out["wall_clock_seconds"] = *wall_clock_seconds;
  }
  return out.dump(2) + "\n";
}

std::string digest(const std::vector<std::string>& inputs) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (const auto& s : inputs) {
    for (unsigned char c : s) {
      feed(c);
    }
    feed(0);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace mi
