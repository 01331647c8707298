#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsp4ad/engine.hpp"
#include "gsp4ad/textio.hpp"
#include "gsp4ad/verify.hpp"

namespace {

using namespace gsp4ad;

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i)
    out += (i ? " " : "") + tokens[i];
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// --branch key=value occurrences as a substitution, keys checked against the
// row's admissibility constraints.
std::map<std::string, Character> parse_branches(
    const SymbolRegistry::Ptr& reg, const std::vector<std::string>& tokens) {
  std::map<std::string, Character> assignment;
  for (const auto& token : tokens) {
    std::size_t eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == token.size())
      throw ParseError("--branch expects key=value, got '" + token + "'", 0);
    std::string key = token.substr(0, eq);
    if (!assignment.emplace(key, parse_character(reg, token.substr(eq + 1)))
             .second)
      throw ParseError("--branch repeats symbol '" + key + "'", 0);
  }
  return assignment;
}

std::string render_lfun(const LFunction& l, const std::string& format) {
  return format == "latex" ? l.render_latex() : l.render_plain();
}

std::string render_char(const Character& c, const std::string& format) {
  return format == "latex" ? c.to_latex() : c.to_string();
}

std::string packet_members(CaseTag tag) {
  std::string out;
  PacketDescriptor packet = l_packet(tag);
  for (std::size_t i = 0; i < packet.members.size(); ++i)
    out += (i ? " " : "") + to_string(packet.members[i]);
  return out;
}

int run_compute(const std::vector<std::string>& spec_tokens,
                const std::vector<std::string>& branch_tokens,
                const std::string& format) {
  auto reg = SymbolRegistry::create();
  RepSpec spec = with_defaults(parse_spec(reg, join_tokens(spec_tokens)));
  if (auto violations = validate(spec); !violations.empty()) {
    for (const auto& v : violations) std::cerr << "validation: " << v << "\n";
    return 1;
  }
  auto assignment = parse_branches(reg, branch_tokens);
  for (const auto& c : constraints_for(spec))
    if (!c.holds(assignment)) {
      std::cerr << "validation: specialization violates " << c.description
                << "\n";
      return 1;
    }

  Derivation d = derive_full(spec);
  PoleReport report = pole_report(d.lfun, constraints_for(spec));
  GprVerdict verdict = gpr_verdict(spec);
  Character central = central_character(spec);

  if (!assignment.empty()) {
    LFunction specialized = d.lfun.substitute(assignment);
    if (format == "json") {
      nlohmann::ordered_json j;
      j["atoms"] = atoms_json(specialized);
      j["ord_s1"] = specialized.pole_order_at_one();
      j["branches"] = nlohmann::ordered_json::array();
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    std::cout << "case: " << to_string(spec.tag) << "\n";
    std::cout << "spec: " << print_spec(spec) << "\n";
    for (const auto& [key, value] : assignment)
      std::cout << "specialized: " << key << "="
                << render_char(value, format) << "\n";
    std::cout << "adjoint: " << render_lfun(specialized, format) << "\n";
    std::cout << "ord_s1: " << specialized.pole_order_at_one() << "\n";
    return 0;
  }

  if (format == "json") {
    std::cout << report_json(d.lfun, report).dump(2) << "\n";
    return 0;
  }
  if (format == "md") {
    std::cout << "| case | L(s,Ad) | ord at s=1 |\n| --- | --- | --- |\n";
    std::cout << "| " << to_string(spec.tag) << " | `" << d.lfun.render_plain()
              << "` | " << format_ord_cell(report) << " |\n";
    return 0;
  }
  std::cout << "case: " << to_string(spec.tag) << "\n";
  std::cout << "spec: " << print_spec(spec) << "\n";
  std::cout << "adjoint: " << render_lfun(d.lfun, format) << "\n";
  std::cout << "degree: " << d.lfun.degree() << "\n";
  std::cout << "kernel_dim: " << d.kernel_dim << "\n";
  std::cout << "suppressed_degree: " << d.suppressed_degree << "\n";
  std::cout << "ord_s1: " << report.generic_order << "\n";
  std::cout << "ord_cell: " << format_ord_cell(report) << "\n";
  for (const auto& b : report.branches)
    std::cout << "branch: " << b.symbol << "=" << render_char(b.value, format)
              << " ord_s1=" << b.order << "\n";
  std::cout << "central: " << render_char(central, format) << "\n";
  std::cout << "generic: " << yes_no(is_generic(spec.tag)) << "\n";
  std::cout << "holomorphic_s1: " << yes_no(verdict.holomorphic_at_one)
            << "\n";
  std::cout << "packet: " << packet_members(spec.tag) << "\n";
  std::cout << "theorem_holds: " << yes_no(verdict.theorem_holds) << "\n";
  return 0;
}

int run_table(const std::string& format) {
  if (format == "md")
    std::cout << "| case | L(s,Ad) | ord at s=1 |\n| --- | --- | --- |\n";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (CaseTag tag : all_case_tags()) {
    auto reg = SymbolRegistry::create();
    RepSpec spec = default_spec(reg, tag);
    LFunction l = derive(spec);
    PoleReport report = pole_report(l, constraints_for(spec));
    std::string ord = format_ord_cell(report);
    if (format == "json") {
      nlohmann::ordered_json row;
      row["case"] = to_string(tag);
      nlohmann::ordered_json body = report_json(l, report);
      row.update(body);
      rows.push_back(row);
    } else if (format == "md") {
      std::cout << "| " << to_string(tag) << " | `" << l.render_plain()
                << "` | " << ord << " |\n";
    } else if (format == "latex") {
      std::cout << to_string(tag) << " & $" << l.render_latex() << "$ & $"
                << ord << "$ \\\\\n";
    } else {
      std::string tag_s = to_string(tag);
      tag_s.resize(6, ' ');
      std::string ord_s = "ord=" + ord;
      ord_s.resize(12, ' ');
      std::cout << tag_s << ord_s << l.render_plain() << "\n";
    }
  }
  if (format == "json") std::cout << rows.dump(2) << "\n";
  return 0;
}

int run_packet(const std::vector<std::string>& spec_tokens,
               const std::string& format) {
  auto reg = SymbolRegistry::create();
  RepSpec spec = parse_spec(reg, join_tokens(spec_tokens));
  PacketDescriptor packet = l_packet(spec.tag);
  if (format == "json") {
    nlohmann::ordered_json j;
    auto members = nlohmann::ordered_json::array();
    for (CaseTag t : packet.members) members.push_back(to_string(t));
    j["packet"] = members;
    j["contains_generic"] = packet.contains_generic;
    j["possible_supercuspidal_member"] = packet.possible_supercuspidal_member;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "packet: " << packet_members(spec.tag) << "\n";
  std::cout << "contains_generic: " << yes_no(packet.contains_generic) << "\n";
  std::cout << "possible_supercuspidal_member: "
            << yes_no(packet.possible_supercuspidal_member) << "\n";
  return 0;
}

int run_verify_cmd(const std::string& scope, std::uint64_t seed) {
  std::cout << "seed: " << seed << "\n";
  auto results = run_verify(scope, seed);
  for (const auto& r : results) std::cout << format_check_line(r) << "\n";
  return all_passed(results) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adjoint L-factors of non-supercuspidal GSp(4) "
               "representations, by exact symbolic derivation"};
  app.require_subcommand(1);

  std::string format = "plain";
  std::vector<std::string> spec_tokens;
  std::vector<std::string> branch_tokens;
  std::string scope = "all";
  std::uint64_t seed = gsp4ad::kDefaultVerifySeed;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"plain", "latex", "md", "json"}));
  };

  CLI::App* compute = app.add_subcommand(
      "compute", "Derive the adjoint L-factor of one representation");
  compute->add_option("spec", spec_tokens,
                      "case=<tag> plus optional key=value inputs "
                      "(chi, chi1, chi2, sigma, xi, pi, omega, selftwists)")
      ->required()
      ->expected(-1);
  compute->add_option("--branch", branch_tokens,
                      "Specialize a symbol, e.g. --branch chi=nu^-1; "
                      "repeatable")
      ->type_size(1);
  add_format(compute);

  CLI::App* table =
      app.add_subcommand("table", "Print the adjoint table for all cases");
  add_format(table);

  CLI::App* packet = app.add_subcommand(
      "packet", "Describe the L-packet of a case, e.g. packet case=VIb");
  packet->add_option("spec", spec_tokens, "case=<tag>")
      ->required()
      ->expected(-1);
  add_format(packet);

  CLI::App* verify =
      app.add_subcommand("verify", "Run the internal verification suite");
  verify->add_option("scope", scope, "all, linalg, tables, gpr, or twist")
      ->check(CLI::IsMember({"all", "linalg", "tables", "gpr", "twist"}));
  verify->add_option("--seed", seed, "Seed for the randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed())
      return run_compute(spec_tokens, branch_tokens, format);
    if (table->parsed()) return run_table(format);
    if (packet->parsed()) return run_packet(spec_tokens, format);
    return run_verify_cmd(scope, seed);
  } catch (const gsp4ad::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const gsp4ad::ValidationError& e) {
    std::cerr << "validation: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 1;
  }
}
