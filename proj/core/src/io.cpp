#include "monideal/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace mi {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ParseError("ideal JSON: " + what); }

} // namespace

MonomialIdeal parse_ideal_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) {
    fail("top level must be an object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "ring" && key != "gens") {
      fail("unexpected key '" + key + "'");
    }
  }
  if (!doc.contains("ring") || !doc["ring"].is_object() || !doc["ring"].contains("vars")) {
    fail("missing ring.vars");
  }
  const json& vars = doc["ring"]["vars"];
  if (!vars.is_array()) {
    fail("ring.vars must be an array");
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string()) {
      fail("ring.vars[" + std::to_string(i) + "] is not a string");
    }
    names.push_back(vars[i].get<std::string>());
  }
  PolyRing ring = [&] {
    try {
      return PolyRing(names);
    } catch (const Error& e) {
      fail(std::string("ring.vars: ") + e.what());
    }
  }();
  if (!doc.contains("gens") || !doc["gens"].is_array()) {
    fail("missing gens array");
  }
  const json& gens = doc["gens"];
  std::vector<Monomial> monomials;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string where = "gens[" + std::to_string(g) + "]";
    if (!gens[g].is_array()) {
      fail(where + " is not an array");
    }
    if (gens[g].size() != ring.size()) {
      fail(where + " has " + std::to_string(gens[g].size()) + " exponents, expected " +
           std::to_string(ring.size()));
    }
    std::vector<Exponent> e;
    for (std::size_t i = 0; i < gens[g].size(); ++i) {
      const json& v = gens[g][i];
      if (!v.is_number_unsigned() ||
          v.get<std::uint64_t>() > std::numeric_limits<Exponent>::max()) {
        fail(where + "[" + std::to_string(i) + "] is not a non-negative 32-bit integer");
      }
      e.push_back(static_cast<Exponent>(v.get<std::uint64_t>()));
    }
    monomials.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(ring), std::move(monomials));
}

MonomialIdeal read_ideal_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_ideal_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string to_json(const MonomialIdeal& I) {
  std::string out = "{\"ring\": {\"vars\": [";
  const auto& vars = I.ring().vars();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += json(vars[i]).dump();
  }
  out += "]}, \"gens\": [";
  for (std::size_t g = 0; g < I.gens().size(); ++g) {
    if (g > 0) {
      out += ',';
    }
    out += '[';
    const auto& e = I.gens()[g].exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(e[i]);
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

void write_ideal_file(const MonomialIdeal& I, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write '" + path + "'");
  }
  out << to_json(I);
}

std::string to_string(const Monomial& m, const PolyRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) {
      continue;
    }
    if (!out.empty()) {
      out += '*';
    }
    out += ring.var(i);
    if (m[i] > 1) {
      out += '^' + std::to_string(m[i]);
    }
  }
  return out.empty() ? "1" : out;
}

namespace {

std::string joined(const MonomialIdeal& I) {
  std::string out;
  for (const auto& g : I.gens()) {
    if (!out.empty()) {
      out += ", ";
    }
    out += to_string(g, I.ring());
  }
  return out;
}

} // namespace

std::string to_string(const MonomialIdeal& I) {
  return I.is_zero() ? "(0)" : "(" + joined(I) + ")";
}

std::string to_m2(const MonomialIdeal& I) {
  return I.is_zero() ? "ideal(0_R)" : "ideal(" + joined(I) + ")";
}

std::string m2_ring(const PolyRing& ring, std::uint32_t characteristic) {
  std::string out = "R = ZZ/" + std::to_string(characteristic) + "[";
  for (std::size_t i = 0; i < ring.size(); ++i) {
    out += (i > 0 ? "," : "") + ring.var(i);
  }
  return out + "]";
}

} // namespace mi
