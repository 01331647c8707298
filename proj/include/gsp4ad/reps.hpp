#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gsp4ad/chars.hpp"
#include "gsp4ad/lfun.hpp"
#include "gsp4ad/sp4.hpp"

namespace gsp4ad {

// The non-supercuspidal part of the classification: every irreducible
// subquotient of a representation parabolically induced from B, P (Siegel)
// or Q (Klingen) falls into one of these named cases.
enum class CaseTag {
  I,
  IIa, IIb,
  IIIa, IIIb,
  IVa, IVb, IVc, IVd,
  Va, Vb, Vc, Vd,
  VIa, VIb, VIc, VId,
  VII,
  VIIIa, VIIIb,
  IXa, IXb,
  X,
  XIa, XIb,
};

inline const std::vector<CaseTag>& all_case_tags() {
  static const std::vector<CaseTag> tags = {
      CaseTag::I,    CaseTag::IIa,   CaseTag::IIb,  CaseTag::IIIa,
      CaseTag::IIIb, CaseTag::IVa,   CaseTag::IVb,  CaseTag::IVc,
      CaseTag::IVd,  CaseTag::Va,    CaseTag::Vb,   CaseTag::Vc,
      CaseTag::Vd,   CaseTag::VIa,   CaseTag::VIb,  CaseTag::VIc,
      CaseTag::VId,  CaseTag::VII,   CaseTag::VIIIa, CaseTag::VIIIb,
      CaseTag::IXa,  CaseTag::IXb,   CaseTag::X,    CaseTag::XIa,
      CaseTag::XIb};
  return tags;
}

inline std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::I: return "I";
    case CaseTag::IIa: return "IIa";
    case CaseTag::IIb: return "IIb";
    case CaseTag::IIIa: return "IIIa";
    case CaseTag::IIIb: return "IIIb";
    case CaseTag::IVa: return "IVa";
    case CaseTag::IVb: return "IVb";
    case CaseTag::IVc: return "IVc";
    case CaseTag::IVd: return "IVd";
    case CaseTag::Va: return "Va";
    case CaseTag::Vb: return "Vb";
    case CaseTag::Vc: return "Vc";
    case CaseTag::Vd: return "Vd";
    case CaseTag::VIa: return "VIa";
    case CaseTag::VIb: return "VIb";
    case CaseTag::VIc: return "VIc";
    case CaseTag::VId: return "VId";
    case CaseTag::VII: return "VII";
    case CaseTag::VIIIa: return "VIIIa";
    case CaseTag::VIIIb: return "VIIIb";
    case CaseTag::IXa: return "IXa";
    case CaseTag::IXb: return "IXb";
    case CaseTag::X: return "X";
    case CaseTag::XIa: return "XIa";
    case CaseTag::XIb: return "XIb";
  }
  return "?";
}

inline std::optional<CaseTag> parse_case_tag(const std::string& s) {
  for (CaseTag t : all_case_tags())
    if (to_string(t) == s) return t;
  return std::nullopt;
}

// Which family a tag belongs to, for input requirements and twisting.
enum class CaseFamily { I, II, III, IV, V, VI, VII, VIII, IX, X, XI };

inline CaseFamily family(CaseTag t) {
  switch (t) {
    case CaseTag::I: return CaseFamily::I;
    case CaseTag::IIa: case CaseTag::IIb: return CaseFamily::II;
    case CaseTag::IIIa: case CaseTag::IIIb: return CaseFamily::III;
    case CaseTag::IVa: case CaseTag::IVb: case CaseTag::IVc: case CaseTag::IVd:
      return CaseFamily::IV;
    case CaseTag::Va: case CaseTag::Vb: case CaseTag::Vc: case CaseTag::Vd:
      return CaseFamily::V;
    case CaseTag::VIa: case CaseTag::VIb: case CaseTag::VIc: case CaseTag::VId:
      return CaseFamily::VI;
    case CaseTag::VII: return CaseFamily::VII;
    case CaseTag::VIIIa: case CaseTag::VIIIb: return CaseFamily::VIII;
    case CaseTag::IXa: case CaseTag::IXb: return CaseFamily::IX;
    case CaseTag::X: return CaseFamily::X;
    case CaseTag::XIa: case CaseTag::XIb: return CaseFamily::XI;
  }
  throw std::logic_error("family: bad tag");
}

struct RepSpec {
  CaseTag tag;
  SymbolRegistry::Ptr reg;
  std::optional<Character> chi1, chi2, chi, sigma, xi;
  std::optional<SupercuspidalGL2> pi;
  std::optional<RatMatrix> siegel_s;  // IXa only; identity when absent

  bool operator==(const RepSpec& o) const {
    return tag == o.tag && chi1 == o.chi1 && chi2 == o.chi2 && chi == o.chi &&
           sigma == o.sigma && xi == o.xi && pi == o.pi &&
           siegel_s == o.siegel_s;
  }
};

struct InputRequirements {
  bool chi1 = false, chi2 = false, chi = false, sigma = false, xi = false,
       pi = false, siegel_s = false;
};

inline InputRequirements required_inputs(CaseTag t) {
  InputRequirements r;
  switch (family(t)) {
    case CaseFamily::I: r.chi1 = r.chi2 = r.sigma = true; break;
    case CaseFamily::II: r.chi = r.sigma = true; break;
    case CaseFamily::III: r.chi = r.sigma = true; break;
    case CaseFamily::IV: r.sigma = true; break;
    case CaseFamily::V: r.xi = r.sigma = true; break;
    case CaseFamily::VI: r.sigma = true; break;
    case CaseFamily::VII: r.chi = r.pi = true; break;
    case CaseFamily::VIII: r.pi = true; break;
    case CaseFamily::IX: r.xi = r.pi = true; r.siegel_s = t == CaseTag::IXa; break;
    case CaseFamily::X: r.pi = r.sigma = true; break;
    case CaseFamily::XI: r.pi = r.sigma = true; break;
  }
  return r;
}

// Row conditions exactly as the catalogue states them; the VII row also
// carries the irreducibility conditions spelled out in prose.
inline std::vector<Constraint> constraints_for(const RepSpec& spec) {
  std::vector<Constraint> cs;
  const auto& reg = spec.reg;
  Character one = Character::trivial(reg);
  Character nu = Character::nu_power(reg, Rat(1));

  auto both = [&](const Character& lhs, const Character& rhs,
                  const std::string& desc) {
    cs.push_back(Constraint::not_equal(lhs, rhs, desc));
    cs.push_back(Constraint::not_equal(lhs, rhs.inverse(), desc));
  };

  switch (family(spec.tag)) {
    case CaseFamily::I:
      both(*spec.chi1, nu, "chi1 != nu^(+-1)");
      both(*spec.chi2, nu, "chi2 != nu^(+-1)");
      both(*spec.chi1, nu * *spec.chi2, "chi1 != nu^(+-1) chi2^(+-1)");
      both(*spec.chi1, nu * spec.chi2->inverse(),
           "chi1 != nu^(+-1) chi2^(+-1)");
      break;
    case CaseFamily::II:
      both(spec.chi->pow(2), nu, "chi^2 != nu^(+-1)");
      both(*spec.chi, Character::nu_power(reg, rat(3, 2)),
           "chi != nu^(+-3/2)");
      break;
    case CaseFamily::III:
      cs.push_back(Constraint::not_equal(*spec.chi, one, "chi != 1"));
      both(*spec.chi, nu.pow(2), "chi != nu^(+-2)");
      break;
    case CaseFamily::IV:
    case CaseFamily::VI:
    case CaseFamily::VIII:
      break;
    case CaseFamily::V:
      cs.push_back(Constraint::not_equal(*spec.xi, one, "xi != 1"));
      cs.push_back(Constraint::equal(spec.xi->pow(2), one, "xi^2 = 1"));
      break;
    case CaseFamily::VII: {
      cs.push_back(Constraint::not_equal(*spec.chi, one, "chi != 1"));
      for (const Character& xi0 : spec.pi->self_twist_characters())
        both(*spec.chi, nu * xi0, "chi != nu^(+-1) xi0 for a self-twist xi0");
      break;
    }
    case CaseFamily::IX:
      cs.push_back(Constraint::not_equal(*spec.xi, one, "xi != 1"));
      cs.push_back(Constraint::equal(spec.xi->pow(2), one, "xi^2 = 1"));
      cs.push_back(Constraint::has_self_twist(*spec.xi, spec.pi->self_twist_ids,
                                              "xi pi = pi"));
      break;
    case CaseFamily::X:
      both(spec.pi->omega, nu, "omega_pi != nu^(+-1)");
      break;
    case CaseFamily::XI:
      cs.push_back(Constraint::equal(spec.pi->omega, one, "omega_pi = 1"));
      break;
  }
  return cs;
}

inline std::vector<std::string> validate(const RepSpec& spec) {
  std::vector<std::string> violations;
  if (!spec.reg) {
    violations.push_back("missing symbol registry");
    return violations;
  }
  InputRequirements req = required_inputs(spec.tag);
  auto check = [&](bool required, bool present, const char* name) {
    if (required && !present)
      violations.push_back(std::string("missing input '") + name + "'");
    if (!required && present)
      violations.push_back(std::string("unexpected input '") + name +
                           "' for case " + to_string(spec.tag));
  };
  check(req.chi1, spec.chi1.has_value(), "chi1");
  check(req.chi2, spec.chi2.has_value(), "chi2");
  check(req.chi, spec.chi.has_value(), "chi");
  check(req.sigma, spec.sigma.has_value(), "sigma");
  check(req.xi, spec.xi.has_value(), "xi");
  check(req.pi, spec.pi.has_value(), "pi");
  if (spec.siegel_s && !req.siegel_s)
    violations.push_back(std::string("unexpected input 's' for case ") +
                         to_string(spec.tag));
  if (!violations.empty()) return violations;

  if (spec.siegel_s) {
    const RatMatrix& s = *spec.siegel_s;
    if (s.rows() != 2 || s.cols() != 2 || !s.is_symmetric() ||
        determinant(s) == 0)
      violations.push_back("s must be a symmetric invertible 2x2 matrix");
  }
  for (const Constraint& c : constraints_for(spec))
    if (!c.holds()) {
      if (std::find(violations.begin(), violations.end(), c.description) ==
          violations.end())
        violations.push_back(c.description);
    }
  return violations;
}

struct ValidationError : std::domain_error {
  std::vector<std::string> violations;
  explicit ValidationError(std::vector<std::string> v)
      : std::domain_error("validation failure: " + join(v)),
        violations(std::move(v)) {}

  static std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + v[i];
    return s;
  }
};

// rho restricted to the diagonal torus: four characters with
// c1 c4 = c2 c3.
struct DiagonalPart {
  std::array<Character, 4> entries;
};

// rho = diag(T det(mu) mu', B mu) through the Levi of the Siegel parabolic;
// mu is the parameter of the GL(2) supercuspidal pi.
struct SiegelPart {
  SupercuspidalGL2 pi;
  Character top;     // T
  Character bottom;  // B
};

// rho = diag(x, sigma mu, det(sigma mu) x^{-1}) through the Levi of the
// Klingen parabolic, x = sigma nu^{shift} omega_pi.
struct KlingenPart {
  SupercuspidalGL2 pi;
  Character sigma;
  Rat nu_shift;
};

struct WDParameter {
  std::variant<DiagonalPart, SiegelPart, KlingenPart> part;
  StandardNilpotent nilpotent;
};

inline Character similitude(const WDParameter& p) {
  if (const auto* d = std::get_if<DiagonalPart>(&p.part))
    return d->entries[0] * d->entries[3];
  if (const auto* s = std::get_if<SiegelPart>(&p.part))
    return s->top * s->bottom * s->pi.omega;
  const auto& k = std::get<KlingenPart>(p.part);
  return k.sigma.pow(2) * k.pi.omega;
}

// rho N rho^{-1} = nu N, checked per family: entrywise on the torus, via the
// block weights on the parabolic parts.
inline std::vector<std::string> admissibility_violations(const WDParameter& p) {
  std::vector<std::string> out;
  if (const auto* d = std::get_if<DiagonalPart>(&p.part)) {
    if (d->entries[0] * d->entries[3] != d->entries[1] * d->entries[2])
      out.push_back("similitude mismatch: c1 c4 != c2 c3");
    if (p.nilpotent.tag == NilpotentTag::SiegelSym) {
      out.push_back("symmetric-block nilpotent needs a Siegel-type parameter");
      return out;
    }
    Character nu = Character::nu_power(d->entries[0].registry(), Rat(1));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (p.nilpotent.matrix.at(i, j) != 0 &&
            d->entries[i] * d->entries[j].inverse() != nu)
          out.push_back("entry (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") of N is not a nu-eigenvector");
    return out;
  }
  if (const auto* s = std::get_if<SiegelPart>(&p.part)) {
    if (p.nilpotent.tag == NilpotentTag::Zero) return out;
    if (p.nilpotent.tag != NilpotentTag::SiegelSym) {
      out.push_back("Siegel-type parameter supports only the zero or "
                    "symmetric-block nilpotent");
      return out;
    }
    Character ratio = s->top * s->bottom.inverse();
    Character nu = Character::nu_power(ratio.registry(), Rat(1));
    bool ok = false;
    for (const Character& xi0 : s->pi.self_twist_characters())
      if (ratio == nu * xi0) ok = true;
    if (!ok)
      out.push_back("block twist ratio T/B is not nu times a self-twist of pi");
    return out;
  }
  const auto& k = std::get<KlingenPart>(p.part);
  if (p.nilpotent.tag == NilpotentTag::Zero) return out;
  if (p.nilpotent.tag != NilpotentTag::N2) {
    out.push_back("Klingen-type parameter supports only the zero or corner "
                  "nilpotent");
    return out;
  }
  Character weight = Character::nu_power(k.sigma.registry(), k.nu_shift * 2) *
                     k.pi.omega;
  if (weight != Character::nu_power(k.sigma.registry(), Rat(1)))
    out.push_back("corner weight x^2/det A is not nu");
  return out;
}

inline WDParameter build_parameter(const RepSpec& spec) {
  std::vector<std::string> violations = validate(spec);
  if (!violations.empty()) throw ValidationError(std::move(violations));

  const auto& reg = spec.reg;
  auto nu = [&](const Rat& r) { return Character::nu_power(reg, r); };
  auto diag = [&](Character c1, Character c2, Character c3, Character c4,
                  StandardNilpotent n) {
    return WDParameter{DiagonalPart{{std::move(c1), std::move(c2),
                                     std::move(c3), std::move(c4)}},
                       std::move(n)};
  };

  WDParameter p = [&]() -> WDParameter {
    const Rat half = rat(1, 2);
    switch (spec.tag) {
      case CaseTag::I:
        return diag(*spec.chi1 * *spec.chi2 * *spec.sigma,
                    *spec.chi1 * *spec.sigma, *spec.chi2 * *spec.sigma,
                    *spec.sigma, StandardNilpotent::zero());
      case CaseTag::IIa:
      case CaseTag::IIb: {
        Character chisigma = *spec.chi * *spec.sigma;
        return diag(spec.chi->pow(2) * *spec.sigma, chisigma.times_nu(half),
                    chisigma.times_nu(-half), *spec.sigma,
                    spec.tag == CaseTag::IIa ? StandardNilpotent::n1()
                                             : StandardNilpotent::zero());
      }
      case CaseTag::IIIa:
      case CaseTag::IIIb: {
        Character chisigma = *spec.chi * *spec.sigma;
        return diag(chisigma.times_nu(half), chisigma.times_nu(-half),
                    spec.sigma->times_nu(half), spec.sigma->times_nu(-half),
                    spec.tag == CaseTag::IIIa ? StandardNilpotent::n4()
                                              : StandardNilpotent::zero());
      }
      case CaseTag::IVa:
      case CaseTag::IVb:
      case CaseTag::IVc:
      case CaseTag::IVd: {
        StandardNilpotent n = spec.tag == CaseTag::IVa ? StandardNilpotent::n5()
                              : spec.tag == CaseTag::IVb
                                  ? StandardNilpotent::n4()
                              : spec.tag == CaseTag::IVc
                                  ? StandardNilpotent::n1()
                                  : StandardNilpotent::zero();
        return diag(spec.sigma->times_nu(rat(3, 2)), spec.sigma->times_nu(half),
                    spec.sigma->times_nu(-half),
                    spec.sigma->times_nu(rat(-3, 2)), std::move(n));
      }
      case CaseTag::Va:
      case CaseTag::Vc:
      case CaseTag::Vd: {
        StandardNilpotent n = spec.tag == CaseTag::Va ? StandardNilpotent::n3()
                              : spec.tag == CaseTag::Vc
                                  ? StandardNilpotent::n2()
                                  : StandardNilpotent::zero();
        Character xisigma = *spec.xi * *spec.sigma;
        return diag(spec.sigma->times_nu(half), xisigma.times_nu(half),
                    xisigma.times_nu(-half), spec.sigma->times_nu(-half),
                    std::move(n));
      }
      case CaseTag::Vb: {
        // the xi-twist of the Vc parameter
        Character xisigma = *spec.xi * *spec.sigma;
        return diag(xisigma.times_nu(half), spec.sigma->times_nu(half),
                    spec.sigma->times_nu(-half), xisigma.times_nu(-half),
                    StandardNilpotent::n2());
      }
      case CaseTag::VIa:
      case CaseTag::VIb:
      case CaseTag::VIc:
      case CaseTag::VId: {
        StandardNilpotent n =
            spec.tag == CaseTag::VIa || spec.tag == CaseTag::VIb
                ? StandardNilpotent::n3()
            : spec.tag == CaseTag::VIc ? StandardNilpotent::n1()
                                       : StandardNilpotent::zero();
        return diag(spec.sigma->times_nu(half), spec.sigma->times_nu(half),
                    spec.sigma->times_nu(-half), spec.sigma->times_nu(-half),
                    std::move(n));
      }
      case CaseTag::VII:
        return {SiegelPart{*spec.pi, *spec.chi, Character::trivial(reg)},
                StandardNilpotent::zero()};
      case CaseTag::VIIIa:
      case CaseTag::VIIIb:
        return {SiegelPart{*spec.pi, Character::trivial(reg),
                           Character::trivial(reg)},
                StandardNilpotent::zero()};
      case CaseTag::IXa:
      case CaseTag::IXb: {
        SiegelPart part{*spec.pi, spec.xi->times_nu(half), nu(-half)};
        if (spec.tag == CaseTag::IXb)
          return {std::move(part), StandardNilpotent::zero()};
        RatMatrix s = spec.siegel_s ? *spec.siegel_s : RatMatrix::identity(2);
        return {std::move(part), StandardNilpotent::siegel_sym(s)};
      }
      case CaseTag::X:
        return {KlingenPart{*spec.pi, *spec.sigma, Rat(0)},
                StandardNilpotent::zero()};
      case CaseTag::XIa:
      case CaseTag::XIb:
        return {KlingenPart{*spec.pi, *spec.sigma, half},
                spec.tag == CaseTag::XIa ? StandardNilpotent::n2()
                                         : StandardNilpotent::zero()};
    }
    throw std::logic_error("build_parameter: bad tag");
  }();

  if (auto bad = admissibility_violations(p); !bad.empty())
    throw std::logic_error("build_parameter: inadmissible parameter: " +
                           ValidationError::join(bad));
  return p;
}

// Central character straight from the catalogue column; always equals the
// similitude character of the parameter.
inline Character central_character(const RepSpec& spec) {
  if (auto v = validate(spec); !v.empty()) throw ValidationError(std::move(v));
  switch (family(spec.tag)) {
    case CaseFamily::I:
      return *spec.chi1 * *spec.chi2 * spec.sigma->pow(2);
    case CaseFamily::II:
      return spec.chi->pow(2) * spec.sigma->pow(2);
    case CaseFamily::III:
      return *spec.chi * spec.sigma->pow(2);
    case CaseFamily::IV:
    case CaseFamily::V:
    case CaseFamily::VI:
      return spec.sigma->pow(2);
    case CaseFamily::VII:
      return *spec.chi * spec.pi->omega;
    case CaseFamily::VIII:
      return spec.pi->omega;
    case CaseFamily::IX:
      return spec.pi->omega * *spec.xi;
    case CaseFamily::X:
      return spec.pi->omega * spec.sigma->pow(2);
    case CaseFamily::XI:
      return spec.sigma->pow(2);
  }
  throw std::logic_error("central_character: bad tag");
}

inline bool is_generic(CaseTag t) {
  switch (t) {
    case CaseTag::I: case CaseTag::IIa: case CaseTag::IIIa: case CaseTag::IVa:
    case CaseTag::Va: case CaseTag::VIa: case CaseTag::VII:
    case CaseTag::VIIIa: case CaseTag::IXa: case CaseTag::X: case CaseTag::XIa:
      return true;
    default:
      return false;
  }
}

struct PacketDescriptor {
  std::vector<CaseTag> members;
  bool contains_generic = false;
  // Va and XIa type packets are expected to pick up a supercuspidal member
  // not covered by this catalogue.
  bool possible_supercuspidal_member = false;
};

inline PacketDescriptor l_packet(CaseTag t) {
  PacketDescriptor p;
  switch (t) {
    case CaseTag::VIa:
    case CaseTag::VIb:
      p.members = {CaseTag::VIa, CaseTag::VIb};
      break;
    case CaseTag::VIIIa:
    case CaseTag::VIIIb:
      p.members = {CaseTag::VIIIa, CaseTag::VIIIb};
      break;
    default:
      p.members = {t};
      break;
  }
  for (CaseTag m : p.members) p.contains_generic |= is_generic(m);
  p.possible_supercuspidal_member = t == CaseTag::Va || t == CaseTag::XIa;
  return p;
}

// Character twist of the representation: cases induced from B or the Klingen
// parabolic absorb tau into sigma, cases induced from the Siegel parabolic
// absorb it into pi.
inline RepSpec twist(const RepSpec& spec, const Character& tau) {
  RepSpec out = spec;
  switch (family(spec.tag)) {
    case CaseFamily::VII:
    case CaseFamily::VIII:
    case CaseFamily::IX:
      if (out.pi) out.pi = out.pi->twisted(tau);
      break;
    default:
      if (out.sigma) out.sigma = *out.sigma * tau;
      break;
  }
  return out;
}

// Generic inputs for a tag: fresh symbols in the registry, the symmetric
// matrix defaulting to the identity.
inline RepSpec default_spec(const SymbolRegistry::Ptr& reg, CaseTag tag) {
  RepSpec spec;
  spec.tag = tag;
  spec.reg = reg;
  InputRequirements req = required_inputs(tag);
  if (req.chi1) spec.chi1 = Character::symbol(reg, "chi1");
  if (req.chi2) spec.chi2 = Character::symbol(reg, "chi2");
  if (req.chi) spec.chi = Character::symbol(reg, "chi");
  if (req.sigma) spec.sigma = Character::symbol(reg, "sigma");
  if (req.xi) spec.xi = Character::symbol(reg, "xi", 2);
  if (req.pi) {
    switch (family(tag)) {
      case CaseFamily::IX:
        spec.pi = SupercuspidalGL2::make(reg, "pi", std::nullopt, {"xi"});
        break;
      case CaseFamily::XI:
        spec.pi = SupercuspidalGL2::make(reg, "pi", Character::trivial(reg));
        break;
      default:
        spec.pi = SupercuspidalGL2::make(reg, "pi");
        break;
    }
  }
  return spec;
}

}  // namespace gsp4ad
