#pragma once

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "charclass.hpp"
#include "classify.hpp"
#include "groupdata.hpp"
#include "oracle.hpp"

namespace pontclass {

using json = nlohmann::ordered_json;

inline constexpr const char *tool_version = "0.1.0";

namespace detail {

inline std::uint64_t fnv1a(const std::string &s,
                           std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

} // namespace detail

// FNV-1a over a canonical text dump of the default catalog: tokens, weights,
// relations and kernel generators.
inline std::string catalog_checksum() {
  static const std::string cached = [] {
    std::ostringstream os;
    for (const auto &s : catalog()) {
      os << to_token(s) << '\n';
      if (s.is_complex())
        continue;
      auto d = get_isotropy_data(s);
      for (const auto &w : d.weights)
        os << render(weight_form(w), d.variable_names) << ';';
      os << "\nzeros " << d.zero_weight_count << '\n';
      for (const auto &r : d.relations)
        os << "rel " << r.var << ' ' << render(r.replacement) << '\n';
      for (const auto &g : d.kernel_gens)
        os << "ker " << render(g, d.variable_names) << '\n';
    }
    return detail::hex64(detail::fnv1a(os.str()));
  }();
  return cached;
}

inline json envelope(const std::string &command, json result) {
  json j;
  j["tool_version"] = tool_version;
  j["catalog_checksum"] = catalog_checksum();
  j["command"] = command;
  j["result"] = std::move(result);
  return j;
}

inline json certificate_json(const membership_result &m,
                             const std::vector<std::string> &names) {
  json terms = json::array();
  for (const auto &t : m.certificate)
    terms.push_back({{"generator", t.generator},
                     {"multiplier", render(poly::term(t.multiplier, 1), names)},
                     {"coefficient", to_string(t.coefficient)}});
  return {{"in_ideal", m.in_ideal}, {"terms", terms}};
}

inline json report_json(const vanishing_report &r) {
  json j;
  j["group"] = to_token(r.spec);
  j["params"] = r.spec.params;
  j["dim_M"] = r.dim_M;
  bool complex = r.via == route::COMPLEX_RULE;
  j["p1"] = {{"polynomial", complex ? json(nullptr)
                                    : json(render(r.p1_poly, r.names))},
             {"vanishes", r.p1_vanishes}};
  j["p2"] = {{"polynomial", complex ? json(nullptr)
                                    : json(render(r.p2_poly, r.names))},
             {"vanishes", r.p2_vanishes}};
  json gens = json::array();
  for (const auto &g : r.kernel_gens)
    gens.push_back(render(g, r.names));
  j["kernel_generators"] = gens;
  j["route"] = to_string(r.via);
  if (r.p1_certificate || r.p2_certificate) {
    json c;
    if (r.p1_certificate)
      c["p1"] = certificate_json(*r.p1_certificate, r.names);
    if (r.p2_certificate)
      c["p2"] = certificate_json(*r.p2_certificate, r.names);
    j["certificates"] = c;
  }
  j["theorem_1_1_member"] = theorem_1_1_member(r.spec);
  j["agrees_with_theorem"] = agrees_with_theorem(r);
  return j;
}

inline json product_json(const product_report &p) {
  json f = json::array();
  for (const auto &r : p.factors)
    f.push_back(report_json(r));
  return {{"factors", f}, {"all_vanish", p.all_vanish}};
}

struct text_style {
  bool color = false;
  std::string paint(const std::string &s, bool good) const {
    if (!color)
      return s;
    return (good ? "\x1b[32m" : "\x1b[31m") + s + "\x1b[0m";
  }
};

inline std::string pad(std::string s, std::size_t w) {
  // Column width counts code points so the check marks line up.
  std::size_t cps = 0;
  for (unsigned char c : s)
    cps += (c & 0xC0) != 0x80;
  if (cps < w)
    s.append(w - cps, ' ');
  return s;
}

inline std::string table_text(const std::vector<vanishing_report> &rows,
                              const text_style &st) {
  std::ostringstream os;
  os << pad("group", 12) << pad("dim", 6) << pad("p1=0", 6) << pad("p2=0", 6)
     << pad("list", 6) << "agrees\n";
  auto mark = [](bool b) { return std::string(b ? "✓" : "✗"); };
  for (const auto &r : rows) {
    bool ok = agrees_with_theorem(r);
    os << pad(to_token(r.spec), 12) << pad(std::to_string(r.dim_M), 6)
       << pad(mark(r.p1_vanishes), 6) << pad(mark(r.p2_vanishes), 6)
       << pad(mark(theorem_1_1_member(r.spec)), 6)
       << st.paint(ok ? "yes" : "NO", ok) << '\n';
  }
  return os.str();
}

inline std::string report_text(const vanishing_report &r,
                               const text_style &st) {
  std::ostringstream os;
  os << "group: " << to_token(r.spec) << "\n";
  os << "dim M: " << r.dim_M << "\n";
  os << "route: " << to_string(r.via) << "\n";
  if (r.via == route::IDEAL_TEST) {
    os << "p1: " << render(r.p1_poly, r.names) << "\n";
    os << "p2: " << render(r.p2_poly, r.names) << "\n";
    for (const auto &g : r.kernel_gens)
      os << "kernel: " << render(g, r.names) << "\n";
  }
  os << "p1 vanishes: " << (r.p1_vanishes ? "yes" : "no") << "\n";
  os << "p2 vanishes: " << (r.p2_vanishes ? "yes" : "no") << "\n";
  bool ok = agrees_with_theorem(r);
  os << "agrees with vanishing list: " << st.paint(ok ? "yes" : "NO", ok)
     << "\n";
  return os.str();
}

inline json checks_json(const std::vector<oracle_check> &checks) {
  json arr = json::array();
  bool all = true;
  for (const auto &c : checks) {
    all = all && c.passed;
    json j{{"name", c.name}, {"group", c.group},
           {"status", c.passed ? "pass" : "fail"}};
    if (!c.passed) {
      j["expected"] = c.expected;
      j["actual"] = c.actual;
    }
    arr.push_back(j);
  }
  return {{"all_passed", all}, {"checks", arr}};
}

inline std::string checks_text(const std::vector<oracle_check> &checks,
                               const text_style &st) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto &c : checks) {
    std::string label = c.name + (c.group.empty() ? "" : " " + c.group);
    os << st.paint(c.passed ? "PASS" : "FAIL", c.passed) << "  " << label
       << '\n';
    if (!c.passed) {
      ++failed;
      os << "  expected: " << c.expected << '\n';
      os << "  actual:   " << c.actual << '\n';
    }
  }
  os << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return os.str();
}

} // namespace pontclass
