#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gsp4ad/lfun.hpp"
#include "gsp4ad/reps.hpp"
#include "gsp4ad/sp4.hpp"

namespace gsp4ad {

// Weight of the root space n1 e1 + n2 e2 under Ad of a diagonal parameter:
// c1^{n1} c2^{n2} lambda^{-(n1+n2)/2} with lambda the similitude. The sum
// n1 + n2 is even for every root here.
inline Character weight_of_root(const DiagonalPart& d, const Root& r) {
  Character lambda = d.entries[0] * d.entries[3];
  Character w = d.entries[0].pow(r.n1) * d.entries[1].pow(r.n2);
  return w * lambda.pow(-(r.n1 + r.n2) / 2);
}

struct Derivation {
  LFunction lfun;
  int kernel_dim = 0;
  // degree sitting in standard-type Levi blocks whose factors are
  // identically 1 for a supercuspidal and are left out of the product
  int suppressed_degree = 0;
};

namespace detail {

inline std::vector<Rat> unit_coord(std::size_t i) {
  std::vector<Rat> u(10, Rat(0));
  u[i] = 1;
  return u;
}

struct LeviBlock {
  std::vector<std::vector<Rat>> basis;
};

// Decomposition of sp(4) under the Levi of the Siegel parabolic:
// center line, traceless GL(2) part, upper and lower symmetric blocks.
inline const std::vector<LeviBlock>& siegel_levi_blocks() {
  static const std::vector<LeviBlock> blocks = [] {
    std::vector<Rat> center(10, Rat(0));
    center[kH1] = 1;
    center[kH2] = 1;
    std::vector<Rat> traceless(10, Rat(0));
    traceless[kH1] = 1;
    traceless[kH2] = -1;
    return std::vector<LeviBlock>{
        {{center}},
        {{unit_coord(kLm1p2), traceless, unit_coord(kLp1m2)}},
        {{unit_coord(kL2e2), unit_coord(kLp1p2), unit_coord(kL2e1)}},
        {{unit_coord(kLm2e1), unit_coord(kLm1m2), unit_coord(kLm2e2)}}};
  }();
  return blocks;
}

// Decomposition under the Levi of the Klingen parabolic: two torus lines,
// the embedded sl(2), two standard-type planes, two corner lines.
inline const std::vector<LeviBlock>& klingen_levi_blocks() {
  static const std::vector<LeviBlock> blocks = {
      {{unit_coord(kH1)}},
      {{unit_coord(kL2e2), unit_coord(kH2), unit_coord(kLm2e2)}},
      {{unit_coord(kLp1p2), unit_coord(kLp1m2)}},
      {{unit_coord(kLm1p2), unit_coord(kLm1m2)}},
      {{unit_coord(kL2e1)}},
      {{unit_coord(kLm2e1)}}};
  return blocks;
}

inline std::size_t intersection_dim(const LeviBlock& block,
                                    const RatMatrix& kernel_span,
                                    std::size_t kernel_rank) {
  RatMatrix b = from_rows(block.basis);
  return b.rows() + kernel_rank - rank(vstack(b, kernel_span));
}

}  // namespace detail

// Adjoint factor of a parameter through the diagonal torus: every
// centralizer basis vector is homogeneous for the torus weights and
// contributes one degree-1 factor.
inline Derivation adjoint_of_diagonal(const DiagonalPart& d,
                                      const StandardNilpotent& n) {
  Derivation out;
  const auto& roots = basis_roots();
  Character trivial = Character::trivial(d.entries[0].registry());
  for (const auto& v : kernel_of_ad_coords(n)) {
    std::optional<Character> weight;
    for (std::size_t i = 0; i < 10; ++i) {
      if (v[i] == 0) continue;
      Character w = roots[i] ? weight_of_root(d, *roots[i]) : trivial;
      if (!weight)
        weight = w;
      else if (*weight != w)
        throw std::logic_error(
            "adjoint_of_diagonal: centralizer vector is not weight-homogeneous");
    }
    out.lfun.add(CharAtom{*weight});
    ++out.kernel_dim;
  }
  return out;
}

inline Derivation adjoint_of_siegel(const SiegelPart& s,
                                    const StandardNilpotent& n) {
  const auto& blocks = detail::siegel_levi_blocks();
  auto kernel = kernel_of_ad_coords(n);
  RatMatrix span = from_rows(kernel);
  std::size_t krank = kernel.size();

  Character ratio = s.top * s.bottom.inverse();  // T / B
  const auto& reg = ratio.registry();

  Derivation out;
  out.kernel_dim = static_cast<int>(krank);
  std::size_t covered = 0;

  std::size_t d1 = detail::intersection_dim(blocks[0], span, krank);
  if (d1 == 1) out.lfun.add(CharAtom{Character::trivial(reg)});
  covered += d1;

  std::size_t d2 = detail::intersection_dim(blocks[1], span, krank);
  if (d2 == 3) {
    out.lfun.add(AdGL2Atom(s.pi, Character::trivial(reg)));
  } else if (d2 == 1) {
    // the invariant line through A0(S); the group acts on it by T/(B nu)
    if (n.tag != NilpotentTag::SiegelSym || !n.s)
      throw std::logic_error("adjoint_of_siegel: stray line in the GL(2) part");
    RatMatrix a0 = a0_matrix(*n.s);
    std::vector<Rat> line = sp4_coordinates(embed_gl2_pair(a0, a0_prime(a0)));
    if (!row_space_contains(span, line))
      throw std::logic_error("adjoint_of_siegel: centralizer line is not the "
                             "expected invariant line");
    out.lfun.add(CharAtom{ratio.times_nu(Rat(-1))});
  } else if (d2 != 0) {
    throw std::logic_error("adjoint_of_siegel: unexpected GL(2)-part overlap");
  }
  covered += d2;

  std::size_t d3 = detail::intersection_dim(blocks[2], span, krank);
  if (d3 == 3)
    out.lfun.add(AdGL2Atom(s.pi, ratio));
  else if (d3 != 0)
    throw std::logic_error("adjoint_of_siegel: split symmetric block");
  covered += d3;

  std::size_t d4 = detail::intersection_dim(blocks[3], span, krank);
  if (d4 == 3)
    out.lfun.add(AdGL2Atom(s.pi, ratio.inverse()));
  else if (d4 != 0)
    throw std::logic_error("adjoint_of_siegel: split symmetric block");
  covered += d4;

  if (covered != krank)
    throw std::logic_error(
        "adjoint_of_siegel: centralizer is not a sum of Levi blocks");
  return out;
}

inline Derivation adjoint_of_klingen(const KlingenPart& k,
                                     const StandardNilpotent& n) {
  const auto& blocks = detail::klingen_levi_blocks();
  auto kernel = kernel_of_ad_coords(n);
  RatMatrix span = from_rows(kernel);
  std::size_t krank = kernel.size();

  const auto& reg = k.sigma.registry();
  // weight of the corner line: x^2 / det A = nu^{2 shift} omega_pi
  Character corner =
      Character::nu_power(reg, k.nu_shift * 2) * k.pi.omega;

  Derivation out;
  out.kernel_dim = static_cast<int>(krank);
  std::size_t covered = 0;

  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::size_t d = detail::intersection_dim(blocks[i], span, krank);
    std::size_t full = blocks[i].basis.size();
    if (d != 0 && d != full)
      throw std::logic_error("adjoint_of_klingen: split Levi block");
    covered += d;
    if (d == 0) continue;
    switch (i) {
      case 0: out.lfun.add(CharAtom{Character::trivial(reg)}); break;
      case 1: out.lfun.add(AdGL2Atom(k.pi, Character::trivial(reg))); break;
      case 2: case 3: out.suppressed_degree += 2; break;
      case 4: out.lfun.add(CharAtom{corner}); break;
      case 5: out.lfun.add(CharAtom{corner.inverse()}); break;
    }
  }
  if (covered != krank)
    throw std::logic_error(
        "adjoint_of_klingen: centralizer is not a sum of Levi blocks");
  return out;
}

inline Derivation adjoint_of(const WDParameter& p) {
  if (auto bad = admissibility_violations(p); !bad.empty())
    throw std::domain_error("adjoint_of: inadmissible parameter: " +
                            ValidationError::join(bad));
  if (const auto* d = std::get_if<DiagonalPart>(&p.part))
    return adjoint_of_diagonal(*d, p.nilpotent);
  if (const auto* s = std::get_if<SiegelPart>(&p.part))
    return adjoint_of_siegel(*s, p.nilpotent);
  return adjoint_of_klingen(std::get<KlingenPart>(p.part), p.nilpotent);
}

// Full derivation: parameter construction, centralizer, weight split.
inline Derivation derive_full(const RepSpec& spec) {
  return adjoint_of(build_parameter(spec));
}

inline LFunction derive(const RepSpec& spec) { return derive_full(spec).lfun; }

// Same product with the similitude direction of the ambient group included:
// one extra trivial factor.
inline LFunction derive_gsp(const RepSpec& spec) {
  LFunction l = derive(spec);
  l.add(CharAtom{Character::trivial(spec.reg)});
  return l;
}

// The closed-form table row for each case, transcribed factor by factor.
// This is an independent path from derive(): any slip in either one breaks
// their comparison.
inline LFunction table_closed_form(const RepSpec& spec) {
  if (auto v = validate(spec); !v.empty()) throw ValidationError(std::move(v));
  const auto& reg = spec.reg;
  Character one = Character::trivial(reg);
  Character nu = Character::nu_power(reg, Rat(1));
  LFunction l;
  auto chars = [&](const std::vector<Character>& cs) {
    for (const auto& c : cs) l.add(CharAtom{c});
  };

  switch (spec.tag) {
    case CaseTag::I: {
      Character chi1 = *spec.chi1, chi2 = *spec.chi2;
      l.add(CharAtom{one}, 2);
      chars({chi1, chi1.inverse(), chi2, chi2.inverse(), chi1 * chi2,
             (chi1 * chi2).inverse(), chi1 * chi2.inverse(),
             chi2 * chi1.inverse()});
      break;
    }
    case CaseTag::IIa: {
      Character chi = *spec.chi;
      chars({one, chi.pow(2), chi.pow(-2), nu, chi.times_nu(rat(1, 2)),
             chi.inverse().times_nu(rat(1, 2))});
      break;
    }
    case CaseTag::IIb: {
      Character chi = *spec.chi;
      l.add(CharAtom{one}, 2);
      chars({chi.pow(2), chi.pow(-2), nu, nu.inverse(),
             chi.times_nu(rat(1, 2)), chi.times_nu(rat(-1, 2)),
             chi.inverse().times_nu(rat(1, 2)),
             chi.inverse().times_nu(rat(-1, 2))});
      break;
    }
    case CaseTag::IIIa: {
      Character chi = *spec.chi;
      chars({one, nu, chi.times_nu(Rat(1)), chi.inverse().times_nu(Rat(1))});
      break;
    }
    case CaseTag::IIIb: {
      Character chi = *spec.chi;
      l.add(CharAtom{one}, 2);
      chars({chi, chi.inverse(), nu, nu.inverse(), chi.times_nu(Rat(1)),
             chi.times_nu(Rat(-1)), chi.inverse().times_nu(Rat(1)),
             chi.inverse().times_nu(Rat(-1))});
      break;
    }
    case CaseTag::IVa:
      chars({nu, nu.pow(3)});
      break;
    case CaseTag::IVb:
      chars({one, nu, nu.inverse(), nu.pow(3)});
      break;
    case CaseTag::IVc:
      chars({one, nu, nu.inverse(), nu.pow(2), nu.pow(3), nu.pow(-3)});
      break;
    case CaseTag::IVd:
      l.add(CharAtom{one}, 2);
      l.add(CharAtom{nu}, 2);
      l.add(CharAtom{nu.inverse()}, 2);
      chars({nu.pow(2), nu.pow(-2), nu.pow(3), nu.pow(-3)});
      break;
    case CaseTag::Va: {
      Character xi = *spec.xi;
      l.add(CharAtom{nu}, 2);
      chars({xi, xi.times_nu(Rat(1))});
      break;
    }
    case CaseTag::Vb:
    case CaseTag::Vc: {
      Character xi = *spec.xi;
      l.add(CharAtom{nu}, 2);
      chars({one, nu.inverse(), xi, xi.times_nu(Rat(1))});
      break;
    }
    case CaseTag::Vd: {
      Character xi = *spec.xi;
      l.add(CharAtom{one}, 2);
      l.add(CharAtom{nu}, 2);
      l.add(CharAtom{nu.inverse()}, 2);
      l.add(CharAtom{xi}, 2);
      chars({xi.times_nu(Rat(1)), xi.times_nu(Rat(-1))});
      break;
    }
    case CaseTag::VIa:
    case CaseTag::VIb:
      l.add(CharAtom{nu}, 3);
      chars({one});
      break;
    case CaseTag::VIc:
      l.add(CharAtom{one}, 2);
      l.add(CharAtom{nu}, 3);
      chars({nu.inverse()});
      break;
    case CaseTag::VId:
      l.add(CharAtom{one}, 4);
      l.add(CharAtom{nu}, 3);
      l.add(CharAtom{nu.inverse()}, 3);
      break;
    case CaseTag::VII: {
      Character chi = *spec.chi;
      l.add(CharAtom{one});
      l.add(AdGL2Atom(*spec.pi, Character::trivial(reg)));
      l.add(AdGL2Atom(*spec.pi, chi));
      l.add(AdGL2Atom(*spec.pi, chi.inverse()));
      break;
    }
    case CaseTag::VIIIa:
    case CaseTag::VIIIb:
      l.add(CharAtom{one});
      l.add(AdGL2Atom(*spec.pi, Character::trivial(reg)), 3);
      break;
    case CaseTag::IXa: {
      Character xi = *spec.xi;
      l.add(CharAtom{xi});
      l.add(AdGL2Atom(*spec.pi, xi.times_nu(Rat(1))));
      break;
    }
    case CaseTag::IXb: {
      Character xi = *spec.xi;
      l.add(CharAtom{one});
      l.add(AdGL2Atom(*spec.pi, Character::trivial(reg)));
      l.add(AdGL2Atom(*spec.pi, xi.times_nu(Rat(1))));
      l.add(AdGL2Atom(*spec.pi, xi.times_nu(Rat(-1))));
      break;
    }
    case CaseTag::X: {
      Character omega = spec.pi->omega;
      l.add(CharAtom{one});
      l.add(AdGL2Atom(*spec.pi, Character::trivial(reg)));
      chars({omega, omega.inverse()});
      break;
    }
    case CaseTag::XIa:
      l.add(CharAtom{nu});
      l.add(AdGL2Atom(*spec.pi, Character::trivial(reg)));
      break;
    case CaseTag::XIb:
      chars({one, nu, nu.inverse()});
      l.add(AdGL2Atom(*spec.pi, Character::trivial(reg)));
      break;
  }
  return l;
}

struct GprVerdict {
  int generic_order = 0;
  std::vector<PoleBranch> branches;
  bool holomorphic_at_one = false;
  bool packet_contains_generic = false;
  bool theorem_holds = false;
};

// The genericity criterion: the adjoint factor is holomorphic at s = 1
// exactly when the L-packet has a generic member, uniformly over all
// admissible specializations of the row.
inline GprVerdict gpr_verdict(const RepSpec& spec) {
  GprVerdict v;
  PoleReport report = pole_report(derive(spec), constraints_for(spec));
  v.generic_order = report.generic_order;
  v.branches = report.branches;
  v.holomorphic_at_one = report.generic_order == 0;
  for (const auto& b : report.branches)
    if (b.order != 0) v.holomorphic_at_one = false;
  v.packet_contains_generic = l_packet(spec.tag).contains_generic;
  v.theorem_holds = v.holomorphic_at_one == v.packet_contains_generic;
  return v;
}

// Group elements of the two Levis, for conjugation-invariance checks.
inline RatMatrix siegel_levi_element(const RatMatrix& a, const Rat& x) {
  if (a.rows() != 2 || a.cols() != 2 || determinant(a) == 0 || x == 0)
    throw std::invalid_argument("siegel_levi_element: need invertible inputs");
  const RatMatrix w = StandardNilpotent::w2();
  RatMatrix a_prime = w * inverse(a).transposed() * w;
  return embed_gl2_pair(a_prime.scaled(x), a);
}

inline RatMatrix klingen_levi_element(const Rat& x, const RatMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2 || determinant(a) == 0 || x == 0)
    throw std::invalid_argument("klingen_levi_element: need invertible inputs");
  RatMatrix g(4, 4);
  g.at(0, 0) = x;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) g.at(1 + i, 1 + j) = a.at(i, j);
  g.at(3, 3) = determinant(a) / x;
  return g;
}

inline const std::vector<std::vector<std::vector<Rat>>>& siegel_block_bases() {
  static const std::vector<std::vector<std::vector<Rat>>> bases = [] {
    std::vector<std::vector<std::vector<Rat>>> out;
    for (const auto& b : detail::siegel_levi_blocks()) out.push_back(b.basis);
    return out;
  }();
  return bases;
}

inline const std::vector<std::vector<std::vector<Rat>>>& klingen_block_bases() {
  static const std::vector<std::vector<std::vector<Rat>>> bases = [] {
    std::vector<std::vector<std::vector<Rat>>> out;
    for (const auto& b : detail::klingen_levi_blocks()) out.push_back(b.basis);
    return out;
  }();
  return bases;
}

}  // namespace gsp4ad
