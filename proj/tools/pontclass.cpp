// pontclass: vanishing of Pontryagin classes of compact locally symmetric
// spaces, decided by exact arithmetic.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "pontclass/pontclass.hpp"

namespace {

using namespace pontclass;

enum exit_code { ok = 0, failure = 1, usage = 2 };

text_style style_for_stdout() {
  text_style st;
  st.color = isatty(STDOUT_FILENO) && std::getenv("PONTCLASS_NO_COLOR") == nullptr;
  return st;
}

void print_json(const json &j) { std::cout << j.dump(2) << '\n'; }

int cmd_classify(const std::vector<std::string> &tokens,
                 const std::string &format, bool certs) {
  std::vector<group_spec> specs;
  for (const auto &t : tokens)
    specs.push_back(parse_group(t));
  classify_options opt;
  opt.certificates = certs;
  if (specs.size() == 1) {
    auto r = classify(specs[0], opt);
    if (format == "json")
      print_json(envelope("classify", report_json(r)));
    else
      std::cout << report_text(r, style_for_stdout());
    return ok;
  }
  auto p = classify_product(specs, opt);
  if (format == "json") {
    print_json(envelope("classify", product_json(p)));
  } else {
    auto st = style_for_stdout();
    for (const auto &f : p.factors)
      std::cout << report_text(f, st) << '\n';
    std::cout << "all factors vanish: " << (p.all_vanish ? "yes" : "no")
              << '\n';
  }
  return ok;
}

int cmd_table(int max_pq, int max_n, const std::string &format,
              unsigned threads) {
  catalog_bounds b{max_pq, max_n};
  auto rows = theorem_table(b, threads);
  bool all = true;
  for (const auto &r : rows)
    all = all && agrees_with_theorem(r);
  if (format == "json") {
    json arr = json::array();
    for (const auto &r : rows)
      arr.push_back(report_json(r));
    print_json(envelope("table", {{"bounds", {{"max_pq", max_pq},
                                              {"max_n", max_n}}},
                                  {"rows", arr},
                                  {"all_agree", all}}));
  } else {
    std::cout << table_text(rows, style_for_stdout());
    std::cout << rows.size() << " groups, "
              << (all ? "all agree" : "DISAGREEMENT FOUND") << '\n';
  }
  return all ? ok : failure;
}

int cmd_chern(const std::string &token, unsigned max_degree,
              const std::string &format) {
  auto spec = parse_group(token);
  if (spec.is_complex())
    throw complex_group_error(
        token + " is a complex group: its Pontryagin classes vanish by rule "
                "and no isotropy weights are stored");
  if (max_degree < default_max_degree)
    throw usage_error("--max-degree must be at least 4");
  auto d = get_isotropy_data(spec);
  auto names = reduced_names(d);
  auto c = split_components(
      apply_relations(total_chern(d, max_degree).truncated_total, d.relations),
      max_degree);
  auto pp = pontryagin_classes(d);
  if (format == "json") {
    json comps = json::array();
    for (unsigned k = 0; k <= max_degree; ++k)
      comps.push_back(render(c.c(k), names));
    print_json(envelope("chern", {{"group", to_token(spec)},
                                  {"variables", names},
                                  {"max_degree", max_degree},
                                  {"components", comps},
                                  {"p1", render(pp.p1, names)},
                                  {"p2", render(pp.p2, names)}}));
  } else {
    std::cout << "group: " << to_token(spec) << '\n';
    for (unsigned k = 0; k <= max_degree; ++k)
      std::cout << "c" << k << ": " << render(c.c(k), names) << '\n';
    std::cout << "p1: " << render(pp.p1, names) << '\n';
    std::cout << "p2: " << render(pp.p2, names) << '\n';
  }
  return ok;
}

int cmd_verify(bool as_json, const std::string &corrupt) {
  oracle_options opt;
  if (!corrupt.empty()) {
    auto s = parse_group(corrupt);
    if (!is_exceptional(s))
      throw usage_error("--corrupt-kernel expects an exceptional group");
    opt.corrupt_kernel = s;
  }
  auto checks = run_oracle_checks(opt);
  bool all = true;
  for (const auto &c : checks)
    all = all && c.passed;
  if (as_json)
    print_json(envelope("verify", checks_json(checks)));
  else
    std::cout << checks_text(checks, style_for_stdout());
  if (!all)
    for (const auto &c : checks)
      if (!c.passed)
        std::cerr << "verification failed: " << c.name
                  << (c.group.empty() ? "" : " for " + c.group) << '\n';
  return all ? ok : failure;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Decide vanishing of Pontryagin classes of compact locally "
               "symmetric spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version));

  std::vector<std::string> tokens;
  std::string classify_format = "json";
  bool certs = false;
  auto *c_classify =
      app.add_subcommand("classify", "classify one group, or a product");
  c_classify->add_option("groups", tokens, "group tokens, e.g. SO:5,3 E7(-5)")
      ->required();
  c_classify->add_option("--format", classify_format)
      ->check(CLI::IsMember({"json", "text"}));
  c_classify->add_flag("--certificates", certs,
                       "include ideal membership witnesses");

  int max_pq = 10, max_n = 6;
  unsigned threads = 1;
  std::string table_format = "text";
  auto *c_table = app.add_subcommand("table", "sweep the catalog");
  c_table->add_option("--max-pq", max_pq, "bound on p+q")
      ->check(CLI::Range(0, 64));
  c_table->add_option("--max-n", max_n, "bound on n")->check(CLI::Range(0, 64));
  c_table->add_option("--format", table_format)
      ->check(CLI::IsMember({"json", "text"}));
  c_table->add_option("--parallel", threads, "worker threads")
      ->check(CLI::Range(1u, 256u));

  std::string chern_token, chern_format = "text";
  unsigned max_degree = default_max_degree;
  auto *c_chern =
      app.add_subcommand("chern", "print Chern and Pontryagin classes");
  c_chern->add_option("group", chern_token)->required();
  c_chern->add_option("--max-degree", max_degree,
                      "truncation degree (polynomial degree, >= 4)");
  c_chern->add_option("--format", chern_format)
      ->check(CLI::IsMember({"json", "text"}));

  bool verify_json = false;
  std::string corrupt;
  auto *c_verify = app.add_subcommand("verify", "run the oracle checks");
  c_verify->add_flag("--json", verify_json);
  c_verify->add_option("--corrupt-kernel", corrupt)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*c_classify)
      return cmd_classify(tokens, classify_format, certs);
    if (*c_table)
      return cmd_table(max_pq, max_n, table_format, threads);
    if (*c_chern)
      return cmd_chern(chern_token, max_degree, chern_format);
    if (*c_verify)
      return cmd_verify(verify_json, corrupt);
  } catch (const usage_error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}
