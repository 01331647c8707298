#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gsp4ad/lfun.hpp"
#include "gsp4ad/reps.hpp"

namespace gsp4ad {

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t at)
      : std::runtime_error(msg + " (at offset " + std::to_string(at) + ")"),
        pos(at) {}
};

// Known supercuspidal forms by name, so parsed Ad factors pick up the right
// self-twist bookkeeping.
using PiTable = std::map<std::string, SupercuspidalGL2>;

namespace detail {

class Scanner {
 public:
  Scanner(std::string_view s, std::size_t base = 0) : s_(s), base_(base) {}

  bool done() const { return i_ >= s_.size(); }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  std::size_t pos() const { return base_ + i_; }

  bool consume(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }

  bool consume(std::string_view t) {
    if (s_.substr(i_).substr(0, t.size()) != t) return false;
    i_ += t.size();
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos());
  }

  void skip_spaces() {
    while (peek() == ' ') ++i_;
  }

  long integer() {
    std::size_t start = i_;
    bool neg = consume('-');
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[i_++];
    if (digits.empty()) {
      i_ = start;
      fail("expected an integer");
    }
    try {
      long v = std::stol(digits);
      return neg ? -v : v;
    } catch (const std::out_of_range&) {
      i_ = start;
      fail("integer out of range");
    }
  }

  Rat rational() {
    long num = integer();
    if (!consume('/')) return Rat(num);
    std::size_t at = i_;
    long den = integer();
    if (den == 0) {
      i_ = at;
      fail("zero denominator");
    }
    return rat(num, den);
  }

  std::string identifier() {
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
      fail("expected a name");
    std::string out;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
      out += s_[i_++];
    return out;
  }

  std::string letters() {
    std::string out;
    while (std::isalpha(static_cast<unsigned char>(peek()))) out += s_[i_++];
    if (out.empty()) fail("expected letters");
    return out;
  }

 private:
  std::string_view s_;
  std::size_t base_;
  std::size_t i_ = 0;
};

inline Character intern_symbol(const SymbolRegistry::Ptr& reg,
                               const std::string& name,
                               std::optional<int> order, const Scanner& sc) {
  try {
    return Character::symbol(reg, name, order);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), sc.pos());
  }
}

}  // namespace detail

// Plain character grammar: '*'-separated terms, each "1", "nu" with an
// optional "^k" or "^(p/q)" exponent, or a symbol name with an optional
// "[order]" marker and integer exponent.
inline Character parse_character(const SymbolRegistry::Ptr& reg,
                                 std::string_view text,
                                 std::size_t base_offset = 0) {
  detail::Scanner sc(text, base_offset);
  Character out = Character::trivial(reg);
  bool first = true;
  for (;;) {
    if (!first) sc.expect('*');
    first = false;
    if (sc.consume('1')) {
      // trivial term
    } else if (std::isalpha(static_cast<unsigned char>(sc.peek())) ||
               sc.peek() == '_') {
      std::string name = sc.identifier();
      if (name == "nu") {
        Rat e(1);
        if (sc.consume('^')) {
          if (sc.consume('(')) {
            e = sc.rational();
            sc.expect(')');
          } else {
            e = Rat(sc.integer());
          }
        }
        out = out.times_nu(e);
      } else {
        std::optional<int> order;
        if (sc.consume('[')) {
          std::size_t at = sc.pos();
          long o = sc.integer();
          if (o < 2) throw ParseError("torsion order must be at least 2", at);
          order = static_cast<int>(o);
          sc.expect(']');
        }
        long e = 1;
        if (sc.consume('^')) e = sc.integer();
        out = out * detail::intern_symbol(reg, name, order, sc).pow(e);
      }
    } else {
      sc.fail("expected a character term");
    }
    if (sc.done()) break;
  }
  return out;
}

namespace detail {

// One symbol written in LaTeX: \chi, \chi_1, \omega_\pi, \mathrm{a}, with
// {\rm ...} tolerated for \mathrm{...}.
inline std::string latex_symbol_name(Scanner& sc) {
  std::string base;
  if (sc.consume("\\mathrm{") || sc.consume("{\\rm ")) {
    base = sc.identifier();
    sc.expect('}');
  } else if (sc.consume('\\')) {
    base = sc.letters();
  } else {
    sc.fail("expected a symbol");
  }
  if (!sc.consume('_')) return base;
  if (sc.consume('\\')) return base + "_" + sc.letters();
  if (sc.consume('{')) {
    std::string sub;
    if (sc.consume("\\mathrm{") || sc.consume("{\\rm ")) {
      sub = "_" + sc.identifier();
      sc.expect('}');
    } else if (sc.consume('\\')) {
      sub = "_" + sc.letters();
    } else {
      while (std::isdigit(static_cast<unsigned char>(sc.peek())))
        sub += static_cast<char>(sc.peek()), sc.consume(sc.peek());
      if (sub.empty()) sc.fail("expected a subscript");
    }
    sc.expect('}');
    return base + sub;
  }
  if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
    std::string d(1, sc.peek());
    sc.consume(sc.peek());
    return base + d;
  }
  sc.fail("expected a subscript");
}

inline long latex_int_exponent(Scanner& sc) {
  if (sc.consume('{')) {
    long e = sc.integer();
    sc.expect('}');
    return e;
  }
  return sc.integer();
}

}  // namespace detail

// LaTeX character grammar as produced by Character::to_latex, torsion orders
// supplied by the registry.
inline Character parse_character_latex(const SymbolRegistry::Ptr& reg,
                                       std::string_view text,
                                       std::size_t base_offset = 0) {
  detail::Scanner sc(text, base_offset);
  Character out = Character::trivial(reg);
  bool saw_term = false;
  for (;;) {
    sc.skip_spaces();
    if (sc.done()) break;
    saw_term = true;
    if (sc.consume("1_{F^\\times}") || sc.consume("1_{F^{\\times}}")) continue;
    if (sc.consume("\\nu")) {
      Rat e(1);
      if (sc.consume('^')) {
        if (sc.consume('{')) {
          e = sc.rational();
          sc.expect('}');
        } else {
          e = Rat(sc.integer());
        }
      }
      out = out.times_nu(e);
      continue;
    }
    std::string name = detail::latex_symbol_name(sc);
    long e = 1;
    if (sc.consume('^')) e = detail::latex_int_exponent(sc);
    out = out * detail::intern_symbol(reg, name, std::nullopt, sc).pow(e);
  }
  if (!saw_term) sc.fail("expected a character");
  return out;
}

namespace detail {

// Body of one L(s,...) factor: the span up to the parenthesis closing the
// "L(s," opener, starting at text[open_end].
inline std::size_t matching_paren(std::string_view text, std::size_t open_end,
                                  std::size_t factor_start) {
  int depth = 1;
  for (std::size_t i = open_end; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && --depth == 0) return i;
  }
  throw ParseError("unbalanced parenthesis in L-factor", factor_start);
}

inline SupercuspidalGL2 resolve_pi(const SymbolRegistry::Ptr& reg,
                                   const std::string& name,
                                   const PiTable& pis) {
  if (auto it = pis.find(name); it != pis.end()) return it->second;
  return SupercuspidalGL2::make(reg, name);
}

inline std::string strip_markup(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    if (s.substr(i).starts_with("\\mathrm")) { i += 7; continue; }
    if (s.substr(i).starts_with("\\rm")) { i += 3; continue; }
    if (s[i] == '{' || s[i] == '}' || s[i] == ' ') { ++i; continue; }
    out += s[i++];
  }
  return out;
}

}  // namespace detail

// Product of L-factors in the plain rendering: space-separated
// "L(s,...)^mult" with "Ad(name)" bodies for degree-3 factors, "1" for the
// empty product.
inline LFunction parse_lfunction_plain(const SymbolRegistry::Ptr& reg,
                                       std::string_view text,
                                       const PiTable& pis = {}) {
  LFunction out;
  if (text == "1") return out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') { ++i; continue; }
    if (text.substr(i).substr(0, 4) != "L(s,")
      throw ParseError("expected 'L(s,'", i);
    std::size_t body_start = i + 4;
    std::size_t close = detail::matching_paren(text, body_start, i);
    std::string_view body = text.substr(body_start, close - body_start);
    std::size_t after = close + 1;
    int mult = 1;
    if (after < text.size() && text[after] == '^') {
      detail::Scanner sc(text.substr(after + 1), after + 1);
      long m = sc.integer();
      if (m <= 0) throw ParseError("multiplicity must be positive", after + 1);
      mult = static_cast<int>(m);
      after = sc.pos();
    }
    if (body.substr(0, 3) == "Ad(") {
      std::size_t ad_close = detail::matching_paren(body, 3, body_start);
      std::string name(body.substr(3, ad_close - 3));
      if (name.empty()) throw ParseError("expected a name", body_start + 3);
      Character twist = Character::trivial(reg);
      std::size_t rest = ad_close + 1;
      if (rest < body.size()) {
        if (body[rest] != '*')
          throw ParseError("expected '*' before the twist", body_start + rest);
        twist = parse_character(reg, body.substr(rest + 1),
                                body_start + rest + 1);
      }
      out.add(AdGL2Atom(detail::resolve_pi(reg, name, pis), twist), mult);
    } else {
      out.add(CharAtom{parse_character(reg, body, body_start)}, mult);
    }
    i = after;
  }
  return out;
}

// Product of L-factors in the LaTeX rendering: concatenated
// "L(s,...)^{mult}" with "\pi,\mathrm{Ad}_{\mathrm{GL}(2)}\otimes..." bodies
// for degree-3 factors; {\rm ...} is tolerated for \mathrm{...}.
inline LFunction parse_lfunction_latex(const SymbolRegistry::Ptr& reg,
                                       std::string_view text,
                                       const PiTable& pis = {}) {
  LFunction out;
  if (text == "1") return out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') { ++i; continue; }
    if (text.substr(i).substr(0, 4) != "L(s,")
      throw ParseError("expected 'L(s,'", i);
    std::size_t body_start = i + 4;
    std::size_t close = detail::matching_paren(text, body_start, i);
    std::string_view body = text.substr(body_start, close - body_start);
    std::size_t after = close + 1;
    int mult = 1;
    if (after < text.size() && text[after] == '^') {
      detail::Scanner sc(text.substr(after + 1), after + 1);
      long m = detail::latex_int_exponent(sc);
      if (m <= 0) throw ParseError("multiplicity must be positive", after + 1);
      mult = static_cast<int>(m);
      after = sc.pos();
    }
    std::size_t comma = body.find(',');
    if (comma == std::string_view::npos) {
      out.add(CharAtom{parse_character_latex(reg, body, body_start)}, mult);
    } else {
      detail::Scanner name_sc(body.substr(0, comma), body_start);
      std::string name = detail::latex_symbol_name(name_sc);
      name_sc.skip_spaces();
      if (!name_sc.done()) name_sc.fail("unexpected trailing input");
      std::string_view rest = body.substr(comma + 1);
      std::size_t rest_base = body_start + comma + 1;
      std::size_t otimes = rest.find("\\otimes");
      std::string_view head =
          otimes == std::string_view::npos ? rest : rest.substr(0, otimes);
      if (detail::strip_markup(head) != "Ad_GL(2)")
        throw ParseError("expected an Ad_{GL(2)} factor", rest_base);
      Character twist = Character::trivial(reg);
      if (otimes != std::string_view::npos)
        twist = parse_character_latex(reg, rest.substr(otimes + 7),
                                      rest_base + otimes + 7);
      out.add(AdGL2Atom(detail::resolve_pi(reg, name, pis), twist), mult);
    }
    i = after;
  }
  return out;
}

inline nlohmann::ordered_json atom_json(const Atom& a) {
  if (const auto* c = std::get_if<CharAtom>(&a))
    return {{"kind", "char"}, {"expr", c->chi.to_string()}};
  const auto& ad = std::get<AdGL2Atom>(a);
  return {{"kind", "ad_gl2"},
          {"pi", ad.pi_name},
          {"twist", ad.twist.to_string()}};
}

inline nlohmann::ordered_json atoms_json(const LFunction& l) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [atom, mult] : l.factors())
    for (int k = 0; k < mult; ++k) arr.push_back(atom_json(atom));
  return arr;
}

inline nlohmann::ordered_json report_json(const LFunction& l,
                                          const PoleReport& report) {
  nlohmann::ordered_json out;
  out["atoms"] = atoms_json(l);
  out["ord_s1"] = report.generic_order;
  auto branches = nlohmann::ordered_json::array();
  for (const auto& b : report.branches)
    branches.push_back({{"symbol", b.symbol},
                        {"value", b.value.to_string()},
                        {"ord_s1", b.order}});
  out["branches"] = branches;
  return out;
}

// Input grammar for one representation: whitespace-separated key=value
// tokens. Recognized keys: case, chi, chi1, chi2, sigma, xi, pi, omega,
// selftwists. Only the fields present are filled in; see with_defaults.
inline RepSpec parse_spec(const SymbolRegistry::Ptr& reg,
                          std::string_view text) {
  RepSpec spec;
  spec.tag = CaseTag::I;
  spec.reg = reg;
  bool have_case = false;
  std::optional<std::string> pi_name;
  std::optional<Character> omega;
  std::vector<std::string> self_twists;
  bool have_selftwists = false;
  std::map<std::string, std::size_t> seen;

  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    std::size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::string_view token = text.substr(start, i - start);
    std::size_t eq = token.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == token.size())
      throw ParseError("expected key=value", start);
    std::string key(token.substr(0, eq));
    std::string_view value = token.substr(eq + 1);
    std::size_t value_at = start + eq + 1;
    if (!seen.emplace(key, start).second)
      throw ParseError("duplicate key '" + key + "'", start);

    if (key == "case") {
      auto tag = parse_case_tag(std::string(value));
      if (!tag) throw ParseError("unknown case tag", value_at);
      spec.tag = *tag;
      have_case = true;
    } else if (key == "chi") {
      spec.chi = parse_character(reg, value, value_at);
    } else if (key == "chi1") {
      spec.chi1 = parse_character(reg, value, value_at);
    } else if (key == "chi2") {
      spec.chi2 = parse_character(reg, value, value_at);
    } else if (key == "sigma") {
      spec.sigma = parse_character(reg, value, value_at);
    } else if (key == "xi") {
      spec.xi = parse_character(reg, value, value_at);
    } else if (key == "omega") {
      omega = parse_character(reg, value, value_at);
    } else if (key == "pi") {
      detail::Scanner sc(value, value_at);
      pi_name = sc.identifier();
      if (!sc.done()) sc.fail("unexpected trailing input");
    } else if (key == "selftwists") {
      have_selftwists = true;
      detail::Scanner sc(value, value_at);
      for (;;) {
        self_twists.push_back(sc.identifier());
        if (sc.done()) break;
        sc.expect(',');
      }
    } else {
      throw ParseError("unknown key '" + key + "'", start);
    }
  }
  if (!have_case) throw ParseError("missing case=<tag>", 0);
  if ((omega || have_selftwists) && !pi_name)
    throw ParseError("omega/selftwists given without pi", 0);
  if (pi_name) {
    try {
      spec.pi = SupercuspidalGL2::make(reg, *pi_name, omega, self_twists);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), seen.at("pi"));
    }
  }
  return spec;
}

// Fill unspecified inputs of a parsed spec with the generic defaults of its
// case, leaving every explicitly given field in place.
inline RepSpec with_defaults(const RepSpec& partial) {
  RepSpec full = default_spec(partial.reg, partial.tag);
  if (partial.chi1) full.chi1 = partial.chi1;
  if (partial.chi2) full.chi2 = partial.chi2;
  if (partial.chi) full.chi = partial.chi;
  if (partial.sigma) full.sigma = partial.sigma;
  if (partial.xi) full.xi = partial.xi;
  if (partial.pi) full.pi = partial.pi;
  if (partial.siegel_s) full.siegel_s = partial.siegel_s;
  return full;
}

inline std::string print_spec(const RepSpec& spec) {
  std::string out = "case=" + to_string(spec.tag);
  auto put = [&](const char* key, const std::optional<Character>& c) {
    if (c) out += std::string(" ") + key + "=" + c->to_string();
  };
  put("chi1", spec.chi1);
  put("chi2", spec.chi2);
  put("chi", spec.chi);
  put("sigma", spec.sigma);
  put("xi", spec.xi);
  if (spec.pi) {
    out += " pi=" + spec.pi->name;
    out += " omega=" + spec.pi->omega.to_string();
    if (!spec.pi->self_twist_ids.empty()) {
      out += " selftwists=";
      const auto& reg = spec.reg;
      for (std::size_t i = 0; i < spec.pi->self_twist_ids.size(); ++i)
        out += (i ? "," : "") + reg->name(spec.pi->self_twist_ids[i]);
    }
  }
  return out;
}

}  // namespace gsp4ad
