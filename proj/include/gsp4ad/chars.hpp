#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsp4ad/rational.hpp"

namespace gsp4ad {

// Interning table for the multiplicative symbols a session works with.
// Append-only: ids stay valid for the registry's lifetime, and entries are
// never mutated after interning, so concurrent readers are safe.
class SymbolRegistry {
 public:
  struct Entry {
    std::string name;
    std::optional<int> torsion_order;  // n >= 2 when the symbol has order n
  };

  using Ptr = std::shared_ptr<SymbolRegistry>;

  static Ptr create() { return std::make_shared<SymbolRegistry>(); }

  int intern(const std::string& name,
             std::optional<int> torsion_order = std::nullopt) {
    validate_name(name);
    if (torsion_order && *torsion_order < 2)
      throw std::invalid_argument("SymbolRegistry: torsion order must be >= 2");
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = by_name_.find(name); it != by_name_.end()) {
      const Entry& e = entries_[static_cast<std::size_t>(it->second)];
      if (torsion_order && e.torsion_order != torsion_order)
        throw std::invalid_argument("SymbolRegistry: symbol '" + name +
                                    "' already interned with a different order");
      return it->second;
    }
    entries_.push_back({name, torsion_order});
    int id = static_cast<int>(entries_.size()) - 1;
    by_name_.emplace(name, id);
    return id;
  }

  std::optional<int> find(const std::string& name) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
    return std::nullopt;
  }

  const Entry& entry(int id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= entries_.size())
      throw std::out_of_range("SymbolRegistry: bad symbol id");
    return entries_[static_cast<std::size_t>(id)];
  }

  const std::string& name(int id) const { return entry(id).name; }
  std::optional<int> torsion_order(int id) const {
    return entry(id).torsion_order;
  }

  static void validate_name(const std::string& name) {
    if (name.empty() || name == "nu")
      throw std::invalid_argument("SymbolRegistry: reserved or empty name");
    auto alpha = [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    };
    if (!alpha(name[0]))
      throw std::invalid_argument("SymbolRegistry: name must start with a letter");
    for (char c : name)
      if (!alpha(c) && !(c >= '0' && c <= '9') && c != '_')
        throw std::invalid_argument("SymbolRegistry: bad character in name '" +
                                    name + "'");
  }

 private:
  mutable std::mutex mutex_;
  std::deque<Entry> entries_;
  std::map<std::string, int> by_name_;
};

// Element of the character group: a formal product nu^r * prod sym_i^{e_i}
// with r rational and e_i integers (reduced mod the order on torsion
// symbols). Values are immutable; all group operations return new objects.
class Character {
 public:
  explicit Character(SymbolRegistry::Ptr reg)
      : reg_(std::move(reg)), nu_exp_(0) {
    if (!reg_) throw std::invalid_argument("Character: null registry");
  }

  static Character trivial(SymbolRegistry::Ptr reg) {
    return Character(std::move(reg));
  }

  static Character nu_power(SymbolRegistry::Ptr reg, const Rat& r) {
    Character c(std::move(reg));
    c.nu_exp_ = r;
    return c;
  }

  static Character symbol(SymbolRegistry::Ptr reg, const std::string& name,
                          std::optional<int> torsion_order = std::nullopt) {
    Character c(reg);
    int id = reg->intern(name, torsion_order);
    c.finite_[id] = 1;
    c.normalize();
    return c;
  }

  const SymbolRegistry::Ptr& registry() const { return reg_; }
  const Rat& nu_exponent() const { return nu_exp_; }
  const std::map<int, long>& finite_part() const { return finite_; }

  bool is_trivial() const { return nu_exp_ == 0 && finite_.empty(); }

  std::optional<Rat> is_nu_power() const {
    if (!finite_.empty()) return std::nullopt;
    return nu_exp_;
  }

  Character operator*(const Character& o) const {
    check_registry(o);
    Character r = *this;
    r.nu_exp_ += o.nu_exp_;
    for (const auto& [id, e] : o.finite_) r.finite_[id] += e;
    r.normalize();
    return r;
  }

  Character inverse() const {
    Character r = *this;
    r.nu_exp_ = -r.nu_exp_;
    for (auto& [id, e] : r.finite_) e = -e;
    r.normalize();
    return r;
  }

  Character pow(long k) const {
    Character r = *this;
    r.nu_exp_ *= Rat(k);
    for (auto& [id, e] : r.finite_) e *= k;
    r.normalize();
    return r;
  }

  // nu^r scaling: used for parameter twists like nu^{1/2} sigma.
  Character times_nu(const Rat& r) const {
    Character c = *this;
    c.nu_exp_ += r;
    return c;
  }

  bool operator==(const Character& o) const {
    check_registry(o);
    return nu_exp_ == o.nu_exp_ && finite_ == o.finite_;
  }
  bool operator!=(const Character& o) const { return !(*this == o); }

  bool operator<(const Character& o) const {
    check_registry(o);
    if (nu_exp_ != o.nu_exp_) return nu_exp_ < o.nu_exp_;
    return finite_ < o.finite_;
  }

  // Replaces whole symbols by characters. Targets may not mention any symbol
  // being replaced, and a target for an order-n symbol must itself have
  // order dividing n.
  Character substitute(const std::map<std::string, Character>& assignment) const {
    for (const auto& [name, target] : assignment) {
      check_registry(target);
      if (!reg_->find(name))
        throw std::invalid_argument("substitute: unknown symbol '" + name + "'");
      for (const auto& [id, e] : target.finite_part())
        if (assignment.count(reg_->name(id)))
          throw std::invalid_argument(
              "substitute: target mentions substituted symbol '" +
              reg_->name(id) + "'");
    }
    Character result = nu_power(reg_, nu_exp_);
    for (const auto& [id, e] : finite_) {
      auto it = assignment.find(reg_->name(id));
      if (it == assignment.end()) {
        Character s(reg_);
        s.finite_[id] = e;
        s.normalize();
        result = result * s;
      } else {
        if (auto order = reg_->torsion_order(id);
            order && !it->second.pow(*order).is_trivial())
          throw std::domain_error("substitute: target for order-" +
                                  std::to_string(*order) + " symbol '" +
                                  reg_->name(id) + "' does not have that order");
        result = result * it->second.pow(e);
      }
    }
    return result;
  }

  std::string to_string() const {
    if (is_trivial()) return "1";
    std::vector<std::string> parts;
    if (nu_exp_ != 0) parts.push_back(render_nu(nu_exp_));
    for (int id : sorted_ids()) {
      const auto& e = reg_->entry(id);
      std::string p = e.name;
      if (e.torsion_order) p += "[" + std::to_string(*e.torsion_order) + "]";
      if (long ex = finite_.at(id); ex != 1) p += "^" + std::to_string(ex);
      parts.push_back(std::move(p));
    }
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i)
      s += (i ? "*" : "") + parts[i];
    return s;
  }

  std::string to_latex() const {
    if (is_trivial()) return "1_{F^\\times}";
    std::string s;
    if (nu_exp_ != 0) {
      s += "\\nu";
      if (nu_exp_ != 1) s += "^{" + gsp4ad::to_string(nu_exp_) + "}";
    }
    for (int id : sorted_ids()) {
      s += latex_symbol(reg_->name(id));
      if (long ex = finite_.at(id); ex != 1)
        s += "^{" + std::to_string(ex) + "}";
    }
    return s;
  }

  static std::string latex_symbol(const std::string& name) {
    static const std::map<std::string, std::string> greek = {
        {"alpha", "\\alpha"}, {"beta", "\\beta"},   {"gamma", "\\gamma"},
        {"delta", "\\delta"}, {"epsilon", "\\epsilon"}, {"zeta", "\\zeta"},
        {"eta", "\\eta"},     {"theta", "\\theta"}, {"kappa", "\\kappa"},
        {"lambda", "\\lambda"}, {"mu", "\\mu"},     {"nu", "\\nu"},
        {"xi", "\\xi"},       {"pi", "\\pi"},       {"rho", "\\rho"},
        {"sigma", "\\sigma"}, {"tau", "\\tau"},     {"phi", "\\phi"},
        {"chi", "\\chi"},     {"psi", "\\psi"},     {"omega", "\\omega"}};
    std::string base = name, digits, sub;
    if (auto us = name.find('_'); us != std::string::npos) {
      base = name.substr(0, us);
      sub = name.substr(us + 1);
    } else {
      while (!base.empty() && base.back() >= '0' && base.back() <= '9') {
        digits.insert(digits.begin(), base.back());
        base.pop_back();
      }
    }
    auto it = greek.find(base);
    std::string out = it != greek.end() ? it->second : "\\mathrm{" + base + "}";
    if (!digits.empty())
      out += digits.size() == 1 ? "_" + digits : "_{" + digits + "}";
    if (!sub.empty()) {
      auto si = greek.find(sub);
      out += si != greek.end() ? "_" + si->second : "_{\\mathrm{" + sub + "}}";
    }
    return out;
  }

 private:
  void normalize() {
    for (auto it = finite_.begin(); it != finite_.end();) {
      if (auto n = reg_->torsion_order(it->first)) {
        long r = it->second % *n;
        if (r < 0) r += *n;
        it->second = r;
      }
      it = it->second == 0 ? finite_.erase(it) : std::next(it);
    }
  }

  void check_registry(const Character& o) const {
    if (reg_ != o.reg_)
      throw std::invalid_argument("Character: mixed symbol registries");
  }

  std::vector<int> sorted_ids() const {
    std::vector<int> ids;
    for (const auto& [id, e] : finite_) ids.push_back(id);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      return reg_->name(a) < reg_->name(b);
    });
    return ids;
  }

  static std::string render_nu(const Rat& e) {
    if (e == 1) return "nu";
    if (is_integer(e)) return "nu^" + gsp4ad::to_string(e);
    return "nu^(" + gsp4ad::to_string(e) + ")";
  }

  SymbolRegistry::Ptr reg_;
  Rat nu_exp_;
  std::map<int, long> finite_;
};

// Irreducible supercuspidal of GL(2) as the engine sees it: an opaque name,
// its central character, the quadratic symbols it is self-dual under
// twisting by, and the character twist accumulated on top of the base form.
struct SupercuspidalGL2 {
  std::string name;
  Character omega;
  std::vector<int> self_twist_ids;
  Character twist;

  static SupercuspidalGL2 make(const SymbolRegistry::Ptr& reg,
                               const std::string& name,
                               std::optional<Character> omega = std::nullopt,
                               const std::vector<std::string>& self_twists = {}) {
    SymbolRegistry::validate_name(name);
    Character om =
        omega ? *omega : Character::symbol(reg, "omega_" + name);
    if (om.registry() != reg)
      throw std::invalid_argument("SupercuspidalGL2: omega from another registry");
    SupercuspidalGL2 pi{name, om, {}, Character::trivial(reg)};
    for (const auto& s : self_twists)
      pi.self_twist_ids.push_back(reg->intern(s, 2));
    std::sort(pi.self_twist_ids.begin(), pi.self_twist_ids.end());
    pi.self_twist_ids.erase(
        std::unique(pi.self_twist_ids.begin(), pi.self_twist_ids.end()),
        pi.self_twist_ids.end());
    return pi;
  }

  const SymbolRegistry::Ptr& registry() const { return omega.registry(); }

  SupercuspidalGL2 twisted(const Character& tau) const {
    SupercuspidalGL2 r = *this;
    r.omega = omega * tau.pow(2);
    r.twist = twist * tau;
    return r;
  }

  bool has_self_twist(const Character& xi) const {
    for (int id : self_twist_ids)
      if (Character::symbol(registry(), registry()->name(id)) == xi) return true;
    return false;
  }

  std::vector<Character> self_twist_characters() const {
    std::vector<Character> out;
    for (int id : self_twist_ids)
      out.push_back(Character::symbol(registry(), registry()->name(id)));
    return out;
  }

  bool operator==(const SupercuspidalGL2& o) const {
    return name == o.name && omega == o.omega &&
           self_twist_ids == o.self_twist_ids && twist == o.twist;
  }
};

}  // namespace gsp4ad
