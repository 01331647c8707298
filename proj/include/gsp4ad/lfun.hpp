#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "gsp4ad/chars.hpp"

namespace gsp4ad {

// Degree-1 Euler factor L(s, chi).
struct CharAtom {
  Character chi;
};

// Degree-3 factor L(s, pi, Ad x twist) attached to the base form of a GL(2)
// supercuspidal; Ad does not see central twists, so only the base name, its
// quadratic self-twists and the explicit twist character matter.
struct AdGL2Atom {
  std::string pi_name;
  std::vector<int> self_twist_ids;
  Character twist;

  AdGL2Atom(const SupercuspidalGL2& pi, Character twist_char)
      : pi_name(pi.name), self_twist_ids(pi.self_twist_ids),
        twist(std::move(twist_char)) {}
};

using Atom = std::variant<CharAtom, AdGL2Atom>;

inline int degree(const Atom& a) {
  return std::holds_alternative<CharAtom>(a) ? 1 : 3;
}

inline std::string render_plain(const Atom& a) {
  if (const auto* c = std::get_if<CharAtom>(&a))
    return "L(s," + c->chi.to_string() + ")";
  const auto& ad = std::get<AdGL2Atom>(a);
  std::string s = "L(s,Ad(" + ad.pi_name + ")";
  if (!ad.twist.is_trivial()) s += "*" + ad.twist.to_string();
  return s + ")";
}

inline std::string render_latex(const Atom& a) {
  if (const auto* c = std::get_if<CharAtom>(&a))
    return "L(s," + c->chi.to_latex() + ")";
  const auto& ad = std::get<AdGL2Atom>(a);
  std::string s = "L(s," + Character::latex_symbol(ad.pi_name) +
                  ",\\mathrm{Ad}_{\\mathrm{GL}(2)}";
  if (!ad.twist.is_trivial()) s += "\\otimes" + ad.twist.to_latex();
  return s + ")";
}

// Order of the pole at s = 1. A character factor has one exactly when the
// character is nu^{-1}; an Ad factor exactly when its twist is nu^{-1} times
// a declared quadratic self-twist of the base form.
inline int pole_order_at_one(const Atom& a) {
  if (const auto* c = std::get_if<CharAtom>(&a))
    return c->chi.is_nu_power() == std::optional<Rat>(Rat(-1)) ? 1 : 0;
  const auto& ad = std::get<AdGL2Atom>(a);
  Character shifted = ad.twist.times_nu(Rat(1));
  const auto& reg = shifted.registry();
  for (int id : ad.self_twist_ids)
    if (shifted == Character::symbol(reg, reg->name(id))) return 1;
  return 0;
}

inline Atom substitute(const Atom& a,
                       const std::map<std::string, Character>& assignment) {
  if (const auto* c = std::get_if<CharAtom>(&a))
    return CharAtom{c->chi.substitute(assignment)};
  AdGL2Atom ad = std::get<AdGL2Atom>(a);
  ad.twist = ad.twist.substitute(assignment);
  return ad;
}

// Finite product of atoms with multiplicities; the factor order is the
// lexicographic order of the plain renderings, which is the canonical
// presentation everywhere.
class LFunction {
 public:
  LFunction() = default;

  void add(const Atom& a, int mult = 1) {
    if (mult <= 0) throw std::invalid_argument("LFunction: multiplicity must be positive");
    auto [it, fresh] = factors_.try_emplace(gsp4ad::render_plain(a), a, mult);
    if (!fresh) it->second.second += mult;
  }

  LFunction operator*(const LFunction& o) const {
    LFunction r = *this;
    for (const auto& [key, am] : o.factors_) r.add(am.first, am.second);
    return r;
  }

  bool operator==(const LFunction& o) const {
    if (factors_.size() != o.factors_.size()) return false;
    for (auto a = factors_.begin(), b = o.factors_.begin(); a != factors_.end();
         ++a, ++b)
      if (a->first != b->first || a->second.second != b->second.second)
        return false;
    return true;
  }
  bool operator!=(const LFunction& o) const { return !(*this == o); }

  std::vector<std::pair<Atom, int>> factors() const {
    std::vector<std::pair<Atom, int>> out;
    for (const auto& [key, am] : factors_) out.push_back(am);
    return out;
  }

  bool empty() const { return factors_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [key, am] : factors_)
      d += gsp4ad::degree(am.first) * am.second;
    return d;
  }

  int pole_order_at_one() const {
    int ord = 0;
    for (const auto& [key, am] : factors_)
      ord += gsp4ad::pole_order_at_one(am.first) * am.second;
    return ord;
  }

  LFunction substitute(const std::map<std::string, Character>& assignment) const {
    LFunction r;
    for (const auto& [key, am] : factors_)
      r.add(gsp4ad::substitute(am.first, assignment), am.second);
    return r;
  }

  std::string render_plain() const {
    std::string s;
    for (const auto& [key, am] : factors_) {
      if (!s.empty()) s += " ";
      s += key;
      if (am.second > 1) s += "^" + std::to_string(am.second);
    }
    return s.empty() ? "1" : s;
  }

  std::string render_latex() const {
    std::string s;
    for (const auto& [key, am] : factors_) {
      s += gsp4ad::render_latex(am.first);
      if (am.second > 1) s += "^{" + std::to_string(am.second) + "}";
    }
    return s.empty() ? "1" : s;
  }

 private:
  std::map<std::string, std::pair<Atom, int>> factors_;
};

// Formal side condition on the inputs of a catalogue row, carried along so
// pole branches can be filtered to the row's actual domain.
struct Constraint {
  enum class Kind { NotEqual, Equal, HasSelfTwist };
  Kind kind;
  Character lhs, rhs;
  std::vector<int> self_twist_ids;  // HasSelfTwist only
  std::string description;

  static Constraint not_equal(Character l, Character r, std::string desc) {
    return {Kind::NotEqual, std::move(l), std::move(r), {}, std::move(desc)};
  }
  static Constraint equal(Character l, Character r, std::string desc) {
    return {Kind::Equal, std::move(l), std::move(r), {}, std::move(desc)};
  }
  static Constraint has_self_twist(Character xi, std::vector<int> ids,
                                   std::string desc) {
    Character placeholder = Character::trivial(xi.registry());
    return {Kind::HasSelfTwist, std::move(xi), std::move(placeholder),
            std::move(ids), std::move(desc)};
  }

  bool holds(const std::map<std::string, Character>& assignment = {}) const {
    Character l = lhs.substitute(assignment);
    switch (kind) {
      case Kind::NotEqual:
        return l != rhs.substitute(assignment);
      case Kind::Equal:
        return l == rhs.substitute(assignment);
      case Kind::HasSelfTwist: {
        const auto& reg = l.registry();
        for (int id : self_twist_ids)
          if (l == Character::symbol(reg, reg->name(id))) return true;
        return false;
      }
    }
    return false;
  }
};

struct PoleBranch {
  std::string symbol;
  Character value;
  int order;
};

struct PoleReport {
  int generic_order = 0;
  std::vector<PoleBranch> branches;  // admissible specializations whose order differs
};

// Specializations of one free symbol that can move the pole order: a
// character factor nu^m s^k forces s -> nu^{(-1-m)/k}; an Ad factor twisted
// by nu^m s^k forces s -> (nu^{-1-m} xi0)^{1/k} over the declared quadratic
// self-twists xi0. Torsion symbols only admit order-compatible targets.
inline PoleReport pole_report(const LFunction& lfun,
                              const std::vector<Constraint>& constraints) {
  PoleReport report;
  report.generic_order = lfun.pole_order_at_one();

  auto factors = lfun.factors();
  if (factors.empty()) return report;
  SymbolRegistry::Ptr reg;

  struct Candidate {
    std::string symbol;
    Character value;
    bool operator<(const Candidate& o) const {
      if (symbol != o.symbol) return symbol < o.symbol;
      return value < o.value;
    }
  };
  std::set<Candidate> candidates;

  auto add_candidate = [&](int sym_id, const Character& value) {
    const auto& r = value.registry();
    // skip self-referential targets; substitute() would reject them
    if (value.finite_part().count(sym_id)) return;
    if (auto order = r->torsion_order(sym_id)) {
      if (!value.pow(*order).is_trivial()) return;
    }
    candidates.insert({r->name(sym_id), value});
  };

  for (const auto& [atom, mult] : factors) {
    if (const auto* c = std::get_if<CharAtom>(&atom)) {
      if (!reg) reg = c->chi.registry();
      const auto& fp = c->chi.finite_part();
      if (fp.size() != 1) continue;
      auto [id, k] = *fp.begin();
      // nu^m s^k = nu^{-1}  =>  s = nu^{(-1-m)/k}
      Rat r = (Rat(-1) - c->chi.nu_exponent()) / Rat(k);
      add_candidate(id, Character::nu_power(c->chi.registry(), r));
    } else {
      const auto& ad = std::get<AdGL2Atom>(atom);
      if (!reg) reg = ad.twist.registry();
      const auto& fp = ad.twist.finite_part();
      if (fp.size() != 1) continue;
      auto [id, k] = *fp.begin();
      if (k != 1 && k != -1) continue;
      for (int xi_id : ad.self_twist_ids) {
        // nu^m s^k = nu^{-1} xi0  =>  s = (nu^{-1-m} xi0)^k for k = +-1
        Character target =
            Character::nu_power(ad.twist.registry(),
                                (Rat(-1) - ad.twist.nu_exponent()) * Rat(k)) *
            Character::symbol(ad.twist.registry(),
                              ad.twist.registry()->name(xi_id));
        add_candidate(id, target);
      }
    }
  }

  for (const auto& cand : candidates) {
    std::map<std::string, Character> assignment = {{cand.symbol, cand.value}};
    bool admissible = true;
    for (const auto& c : constraints)
      if (!c.holds(assignment)) {
        admissible = false;
        break;
      }
    if (!admissible) continue;
    int order = lfun.substitute(assignment).pole_order_at_one();
    if (order != report.generic_order)
      report.branches.push_back({cand.symbol, cand.value, order});
  }
  return report;
}

}  // namespace gsp4ad
