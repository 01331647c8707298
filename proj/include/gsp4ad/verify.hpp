#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gsp4ad/engine.hpp"
#include "gsp4ad/textio.hpp"

namespace gsp4ad {

inline constexpr std::uint64_t kDefaultVerifySeed = 2026;

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  double seconds = 0;
};

// The adjoint factors as printed, one cell per case.
inline const char* printed_adjoint_row(CaseTag tag) {
  switch (tag) {
    case CaseTag::I:
      return "L(s,1_{F^\\times})^2L(s,\\chi_1)L(s,\\chi_1^{-1})L(s,\\chi_2)"
             "L(s,\\chi_2^{-1})L(s,\\chi_1\\chi_2)L(s,\\chi_1^{-1}\\chi_2^{-1})"
             "L(s,\\chi_1\\chi_2^{-1})L(s,\\chi_1^{-1}\\chi_2)";
    case CaseTag::IIa:
      return "L(s,1_{F^\\times})L(s,\\nu)L(s,\\chi^2)L(s,\\chi^{-2})"
             "L(s,\\nu^{1/2}\\chi)L(s,\\nu^{1/2}\\chi^{-1})";
    case CaseTag::IIb:
      return "L(s,1_{F^\\times})^2L(s,\\nu)L(s,\\nu^{-1})L(s,\\chi^2)"
             "L(s,\\chi^{-2})L(s,\\nu^{1/2}\\chi)L(s,\\nu^{-1/2}\\chi)"
             "L(s,\\nu^{1/2}\\chi^{-1})L(s,\\nu^{-1/2}\\chi^{-1})";
    case CaseTag::IIIa:
      return "L(s,1_{F^\\times})L(s,\\nu)L(s,\\nu\\chi)L(s,\\nu\\chi^{-1})";
    case CaseTag::IIIb:
      return "L(s,1_{F^\\times})^2L(s,\\nu)L(s,\\nu^{-1})L(s,\\chi)"
             "L(s,\\chi^{-1})L(s,\\nu\\chi)L(s,\\nu^{-1}\\chi)"
             "L(s,\\nu\\chi^{-1})L(s,\\nu^{-1}\\chi^{-1})";
    case CaseTag::IVa:
      return "L(s,\\nu)L(s,\\nu^3)";
    case CaseTag::IVb:
      return "L(s,1_{F^\\times})L(s,\\nu)L(s,\\nu^{-1})L(s,\\nu^3)";
    case CaseTag::IVc:
      return "L(s,1_{F^\\times})L(s,\\nu)L(s,\\nu^{-1})L(s,\\nu^2)"
             "L(s,\\nu^3)L(s,\\nu^{-3})";
    case CaseTag::IVd:
      return "L(s,1_{F^\\times})^2L(s,\\nu)^2L(s,\\nu^{-1})^2L(s,\\nu^2)"
             "L(s,\\nu^{-2})L(s,\\nu^3)L(s,\\nu^{-3})";
    case CaseTag::Va:
      return "L(s,\\nu)^2L(s,\\xi)L(s,\\nu\\xi)";
    case CaseTag::Vb:
    case CaseTag::Vc:
      return "L(s,1_{F^\\times})L(s,\\nu)^2L(s,\\nu^{-1})L(s,\\xi)"
             "L(s,\\nu\\xi)";
    case CaseTag::Vd:
      return "L(s,1_{F^\\times})^2L(s,\\nu)^2L(s,\\nu^{-1})^2L(s,\\xi)^2"
             "L(s,\\nu\\xi)L(s,\\nu^{-1}\\xi)";
    case CaseTag::VIa:
    case CaseTag::VIb:
      return "L(s,1_{F^\\times})L(s,\\nu)^3";
    case CaseTag::VIc:
      return "L(s,1_{F^\\times})^2L(s,\\nu)^3L(s,\\nu^{-1})";
    case CaseTag::VId:
      return "L(s,1_{F^\\times})^4L(s,\\nu)^3L(s,\\nu^{-1})^3";
    case CaseTag::VII:
      return "L(s,1_{F^\\times})L(s,\\pi,\\mathrm{Ad}_{\\mathrm{GL}(2)})"
             "L(s,\\pi,\\mathrm{Ad}_{\\mathrm{GL}(2)}\\otimes\\chi)"
             "L(s,\\pi,\\mathrm{Ad}_{\\mathrm{GL}(2)}\\otimes\\chi^{-1})";
    case CaseTag::VIIIa:
    case CaseTag::VIIIb:
      return "L(s,1_{F^\\times})L(s,\\pi,\\mathrm{Ad}_{\\mathrm{GL}(2)})^3";
    case CaseTag::IXa:
      return "L(s,\\xi)L(s,\\pi,\\mathrm{Ad}_{\\mathrm{GL}(2)}\\otimes\\nu\\xi)";
    case CaseTag::IXb:
      return "L(s,1_{F^\\times})L(s,\\pi,\\mathrm{Ad}_{\\mathrm{GL}(2)})"
             "L(s,\\pi,\\mathrm{Ad}_{\\mathrm{GL}(2)}\\otimes\\nu\\xi)"
             "L(s,\\pi,\\mathrm{Ad}_{\\mathrm{GL}(2)}\\otimes\\nu^{-1}\\xi)";
    case CaseTag::X:
      return "L(s,1_{F^\\times})L(s,\\pi,\\mathrm{Ad}_{\\mathrm{GL}(2)})"
             "L(s,\\omega_\\pi)L(s,\\omega_\\pi^{-1})";
    case CaseTag::XIa:
      return "L(s,\\nu)L(s,\\pi,\\mathrm{Ad}_{\\mathrm{GL}(2)})";
    case CaseTag::XIb:
      return "L(s,1_{F^\\times})L(s,\\nu)L(s,\\nu^{-1})"
             "L(s,\\pi,\\mathrm{Ad}_{\\mathrm{GL}(2)})";
  }
  return "";
}

// The printed pole-order column at s = 1; IIIb prints "1 or 2".
inline const char* printed_ord_cell(CaseTag tag) {
  switch (tag) {
    case CaseTag::IIb: case CaseTag::IVb: case CaseTag::IVc:
    case CaseTag::Vb: case CaseTag::Vc: case CaseTag::VIc:
    case CaseTag::IXb: case CaseTag::XIb:
      return "1";
    case CaseTag::IIIb:
      return "1 or 2";
    case CaseTag::IVd: case CaseTag::Vd:
      return "2";
    case CaseTag::VId:
      return "3";
    default:
      return "0";
  }
}

inline std::string format_ord_cell(const PoleReport& report) {
  std::vector<int> orders = {report.generic_order};
  for (const auto& b : report.branches)
    if (std::find(orders.begin(), orders.end(), b.order) == orders.end())
      orders.push_back(b.order);
  std::sort(orders.begin(), orders.end());
  std::string out;
  for (std::size_t i = 0; i < orders.size(); ++i)
    out += (i ? " or " : "") + std::to_string(orders[i]);
  return out;
}

namespace verifydetail {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline void fail(CheckResult& r, const std::string& msg) {
  if (r.pass) r.detail = msg;
  r.pass = false;
}

inline Rat random_rat(std::mt19937_64& rng, long num_bound = 9,
                      long den_bound = 4) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  return rat(num(rng), den(rng));
}

inline Rat random_nonzero_rat(std::mt19937_64& rng) {
  for (;;) {
    Rat r = random_rat(rng);
    if (r != 0) return r;
  }
}

inline RatMatrix random_matrix(std::mt19937_64& rng, std::size_t r,
                               std::size_t c) {
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_rat(rng);
  return m;
}

inline RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    RatMatrix m = random_matrix(rng, n, n);
    if (determinant(m) != 0) return m;
  }
}

inline RatMatrix random_symmetric_invertible(std::mt19937_64& rng) {
  for (;;) {
    RatMatrix m(2, 2);
    m.at(0, 0) = random_rat(rng);
    m.at(1, 1) = random_rat(rng);
    Rat v = random_rat(rng);
    m.at(0, 1) = v;
    m.at(1, 0) = v;
    if (determinant(m) != 0) return m;
  }
}

inline Character random_character(std::mt19937_64& rng,
                                  const SymbolRegistry::Ptr& reg) {
  static const std::vector<std::pair<std::string, std::optional<int>>> pool = {
      {"a", std::nullopt}, {"b", std::nullopt}, {"c", std::nullopt},
      {"xi", 2},           {"zeta", 3}};
  std::uniform_int_distribution<int> half(-4, 4);
  Character out = Character::nu_power(reg, rat(half(rng), 2));
  std::uniform_int_distribution<int> exp(-3, 3);
  for (const auto& [name, order] : pool)
    out = out * Character::symbol(reg, name, order).pow(exp(rng));
  return out;
}

inline std::vector<Rat> unit_coord(std::size_t i) {
  std::vector<Rat> u(10, Rat(0));
  u[i] = 1;
  return u;
}

}  // namespace verifydetail

// Criterion: every derived adjoint factor equals both the independently
// transcribed closed form and the printed table cell.
inline CheckResult check_adjoint_table_rows() {
  CheckResult r{"adjoint-table-rows"};
  verifydetail::Timer timer;
  for (CaseTag tag : all_case_tags()) {
    auto reg = SymbolRegistry::create();
    RepSpec spec = default_spec(reg, tag);
    LFunction derived = derive(spec);
    if (derived != table_closed_form(spec)) {
      verifydetail::fail(r, "case " + to_string(tag) +
                                ": derived row differs from the closed form");
      continue;
    }
    PiTable pis;
    if (spec.pi) pis.emplace(spec.pi->name, *spec.pi);
    LFunction printed;
    try {
      printed = parse_lfunction_latex(reg, printed_adjoint_row(tag), pis);
    } catch (const ParseError& e) {
      verifydetail::fail(r, "case " + to_string(tag) +
                                ": printed cell does not parse: " + e.what());
      continue;
    }
    if (derived != printed)
      verifydetail::fail(r, "case " + to_string(tag) +
                                ": derived row differs from the printed cell");
    else if (derived.render_latex() != printed.render_latex())
      verifydetail::fail(r, "case " + to_string(tag) +
                                ": canonical renderings disagree");
  }
  r.seconds = timer.seconds();
  if (r.pass && r.seconds >= 1.0)
    verifydetail::fail(r, "exceeded the 1s budget");
  if (r.pass) r.detail = "25 rows against the printed table";
  return r;
}

// Criterion: the pole-order column, including the IIIb specializations.
inline CheckResult check_pole_orders() {
  CheckResult r{"pole-orders"};
  verifydetail::Timer timer;
  for (CaseTag tag : all_case_tags()) {
    auto reg = SymbolRegistry::create();
    RepSpec spec = default_spec(reg, tag);
    PoleReport report = pole_report(derive(spec), constraints_for(spec));
    if (format_ord_cell(report) != printed_ord_cell(tag)) {
      verifydetail::fail(r, "case " + to_string(tag) + ": ord cell is '" +
                                format_ord_cell(report) + "', printed '" +
                                printed_ord_cell(tag) + "'");
      continue;
    }
    if (tag == CaseTag::IIIb) {
      bool good = report.generic_order == 1 && report.branches.size() == 2 &&
                  report.branches[0].symbol == "chi" &&
                  report.branches[0].value ==
                      Character::nu_power(reg, Rat(-1)) &&
                  report.branches[0].order == 2 &&
                  report.branches[1].symbol == "chi" &&
                  report.branches[1].value ==
                      Character::nu_power(reg, Rat(1)) &&
                  report.branches[1].order == 2;
      if (!good) verifydetail::fail(r, "IIIb branch set is wrong");
    } else if (!report.branches.empty()) {
      verifydetail::fail(r, "case " + to_string(tag) +
                                ": unexpected specialization branches");
    }
  }
  r.seconds = timer.seconds();
  if (r.pass) r.detail = "25 ord cells, IIIb branches exact";
  return r;
}

// Criterion: holomorphy at s = 1 matches the presence of a generic packet
// member on every row.
inline CheckResult check_genericity() {
  CheckResult r{"genericity-criterion"};
  verifydetail::Timer timer;
  for (CaseTag tag : all_case_tags()) {
    auto reg = SymbolRegistry::create();
    GprVerdict v = gpr_verdict(default_spec(reg, tag));
    bool expect_pole = false;
    switch (tag) {
      case CaseTag::IIb: case CaseTag::IIIb: case CaseTag::IVb:
      case CaseTag::IVc: case CaseTag::IVd: case CaseTag::Vb:
      case CaseTag::Vc: case CaseTag::Vd: case CaseTag::VIc:
      case CaseTag::VId: case CaseTag::IXb: case CaseTag::XIb:
        expect_pole = true;
        break;
      default:
        break;
    }
    if (v.holomorphic_at_one != !expect_pole)
      verifydetail::fail(r, "case " + to_string(tag) +
                                ": holomorphy verdict is wrong");
    if (!v.theorem_holds)
      verifydetail::fail(r, "case " + to_string(tag) +
                                ": criterion fails on this row");
  }
  r.seconds = timer.seconds();
  if (r.pass) r.detail = "25 rows, packet tables consulted";
  return r;
}

// Criterion: centralizer dimensions and frozen spanning sets for the five
// standard nilpotents and zero.
inline CheckResult check_nilpotent_centralizers() {
  CheckResult r{"nilpotent-centralizers"};
  verifydetail::Timer timer;
  using verifydetail::unit_coord;

  auto combine = [](std::initializer_list<std::pair<std::size_t, long>> terms) {
    std::vector<Rat> v(10, Rat(0));
    for (auto [i, c] : terms) v[i] = c;
    return v;
  };

  std::vector<std::pair<StandardNilpotent, std::vector<std::vector<Rat>>>>
      table;
  {
    std::vector<std::vector<Rat>> all;
    for (std::size_t i = 0; i < 10; ++i) all.push_back(unit_coord(i));
    table.emplace_back(StandardNilpotent::zero(), all);
  }
  table.emplace_back(
      StandardNilpotent::n1(),
      std::vector<std::vector<Rat>>{unit_coord(kH1), unit_coord(kL2e1),
                                    unit_coord(kLp1p2), unit_coord(kL2e2),
                                    unit_coord(kLm1p2), unit_coord(kLm2e1)});
  table.emplace_back(
      StandardNilpotent::n2(),
      std::vector<std::vector<Rat>>{unit_coord(kH2), unit_coord(kL2e1),
                                    unit_coord(kLp1p2), unit_coord(kL2e2),
                                    unit_coord(kLm2e2), unit_coord(kLp1m2)});
  table.emplace_back(
      StandardNilpotent::n3(),
      std::vector<std::vector<Rat>>{unit_coord(kL2e1), unit_coord(kLp1p2),
                                    unit_coord(kL2e2),
                                    combine({{kLp1m2, 1}, {kLm1p2, -1}})});
  table.emplace_back(
      StandardNilpotent::n4(),
      std::vector<std::vector<Rat>>{combine({{kH1, 1}, {kH2, 1}}),
                                    unit_coord(kLm2e2), unit_coord(kLp1m2),
                                    unit_coord(kL2e1)});
  table.emplace_back(StandardNilpotent::n5(),
                     std::vector<std::vector<Rat>>{
                         unit_coord(kL2e1),
                         combine({{kL2e2, 1}, {kLp1m2, 1}})});

  for (const auto& [n, span] : table) {
    auto kernel = kernel_of_ad_coords(n);
    if (kernel.size() != span.size()) {
      verifydetail::fail(r, to_string(n.tag) + ": wrong centralizer dimension");
      continue;
    }
    if (!same_row_space(from_rows(kernel), from_rows(span)))
      verifydetail::fail(r, to_string(n.tag) + ": wrong centralizer span");
  }
  r.seconds = timer.seconds();
  if (r.pass) r.detail = "6 centralizers, dimensions and spans frozen";
  return r;
}

// Criterion: the symmetric-matrix family of nilpotents, sampled.
inline CheckResult check_siegel_family(std::uint64_t seed, int samples = 100) {
  CheckResult r{"siegel-family"};
  verifydetail::Timer timer;
  std::mt19937_64 rng(seed);
  const RatMatrix w = StandardNilpotent::w2();
  for (int i = 0; i < samples && r.pass; ++i) {
    RatMatrix s = verifydetail::random_symmetric_invertible(rng);
    StandardNilpotent n = StandardNilpotent::siegel_sym(s);
    RatMatrix a0 = a0_matrix(s);
    RatMatrix b = w * s;
    if (a0 * b != b * a0_prime(a0)) {
      verifydetail::fail(r, "intertwining relation fails");
      break;
    }
    auto kernel = kernel_of_ad_coords(n);
    if (kernel.size() != 4 || rank(ad_in_basis(n)) != 6) {
      verifydetail::fail(r, "wrong centralizer or image dimension");
      break;
    }
    RatMatrix span = from_rows(kernel);
    for (std::size_t idx : {std::size_t(kL2e1), std::size_t(kLp1p2),
                            std::size_t(kL2e2)})
      if (!row_space_contains(span, verifydetail::unit_coord(idx)))
        verifydetail::fail(r, "symmetric block missing from the centralizer");
    if (!row_space_contains(
            span, sp4_coordinates(embed_gl2_pair(a0, a0_prime(a0)))))
      verifydetail::fail(r, "invariant line missing from the centralizer");
  }
  r.seconds = timer.seconds();
  if (r.pass && r.seconds >= 2.0)
    verifydetail::fail(r, "exceeded the 2s budget");
  if (r.pass)
    r.detail = std::to_string(samples) + " random symmetric matrices";
  return r;
}

// Criterion: every constructed parameter is admissible and its similitude
// equals the catalogued central character; bad combinations are rejected.
inline CheckResult check_admissibility() {
  CheckResult r{"admissibility"};
  verifydetail::Timer timer;
  for (CaseTag tag : all_case_tags()) {
    auto reg = SymbolRegistry::create();
    RepSpec spec = default_spec(reg, tag);
    WDParameter p = build_parameter(spec);
    if (!admissibility_violations(p).empty()) {
      verifydetail::fail(r, "case " + to_string(tag) + ": parameter rejected");
      continue;
    }
    if (similitude(p) != central_character(spec))
      verifydetail::fail(r, "case " + to_string(tag) +
                                ": similitude differs from the central "
                                "character");
  }
  {
    auto reg = SymbolRegistry::create();
    RepSpec spec = default_spec(reg, CaseTag::X);
    WDParameter p = build_parameter(spec);
    p.nilpotent = StandardNilpotent::n2();
    if (admissibility_violations(p).empty())
      verifydetail::fail(r, "shift-0 parameter accepted with a nilpotent");
  }
  {
    auto reg = SymbolRegistry::create();
    RepSpec spec = default_spec(reg, CaseTag::IIIa);
    WDParameter p = build_parameter(spec);
    p.nilpotent = StandardNilpotent::n5();
    if (admissibility_violations(p).empty())
      verifydetail::fail(r, "wrong nilpotent accepted on a diagonal parameter");
  }
  r.seconds = timer.seconds();
  if (r.pass) r.detail = "25 parameters plus rejection probes";
  return r;
}

// Criterion: similitude twists change nothing in the adjoint factor and obey
// the square law on central characters.
inline CheckResult check_twist_invariance(std::uint64_t seed,
                                          int per_case = 20) {
  CheckResult r{"twist-invariance"};
  verifydetail::Timer timer;
  std::mt19937_64 rng(seed);
  for (CaseTag tag : all_case_tags()) {
    auto reg = SymbolRegistry::create();
    RepSpec spec = default_spec(reg, tag);
    LFunction base = derive(spec);
    Character center = central_character(spec);
    for (int i = 0; i < per_case && r.pass; ++i) {
      Character tau = verifydetail::random_character(rng, reg);
      RepSpec twisted = twist(spec, tau);
      if (!validate(twisted).empty()) {
        verifydetail::fail(r, "case " + to_string(tag) +
                                  ": twisted data fails validation");
        break;
      }
      if (derive(twisted) != base) {
        verifydetail::fail(r, "case " + to_string(tag) +
                                  ": adjoint factor moved under a twist");
        break;
      }
      if (central_character(twisted) != tau.pow(2) * center)
        verifydetail::fail(r, "case " + to_string(tag) +
                                  ": central character breaks the square law");
    }
  }
  r.seconds = timer.seconds();
  if (r.pass)
    r.detail = std::to_string(per_case) + " random twists per case";
  return r;
}

// Criterion: the two Levi block tables decompose sp(4) and each block is
// stable under random Levi conjugations.
inline CheckResult check_levi_decompositions(std::uint64_t seed,
                                             int samples = 50) {
  CheckResult r{"levi-decompositions"};
  verifydetail::Timer timer;
  std::mt19937_64 rng(seed);
  for (const auto* bases : {&siegel_block_bases(), &klingen_block_bases()}) {
    std::vector<std::vector<Rat>> all;
    for (const auto& block : *bases)
      for (const auto& v : block) all.push_back(v);
    if (all.size() != 10 || rank(from_rows(all)) != 10)
      verifydetail::fail(r, "block table does not decompose sp(4)");
  }
  for (int i = 0; i < samples && r.pass; ++i) {
    RatMatrix a = verifydetail::random_invertible(rng, 2);
    Rat x = verifydetail::random_nonzero_rat(rng);
    RatMatrix gs = siegel_levi_element(a, x);
    RatMatrix gk = klingen_levi_element(x, a);
    const RatMatrix j = symplectic_form_j();
    if (gs.transposed() * j * gs != j.scaled(x) ||
        gk.transposed() * j * gk != j.scaled(determinant(a))) {
      verifydetail::fail(r, "Levi element leaves the similitude group");
      break;
    }
    for (const auto* bases :
         {&siegel_block_bases(), &klingen_block_bases()}) {
      const RatMatrix& g =
          bases == &siegel_block_bases() ? gs : gk;
      RatMatrix ginv = inverse(g);
      for (const auto& block : *bases) {
        RatMatrix span = from_rows(block);
        for (const auto& v : block) {
          RatMatrix conj = g * sp4_from_coordinates(v) * ginv;
          if (!row_space_contains(span, sp4_coordinates(conj)))
            verifydetail::fail(r, "conjugation leaves a Levi block");
        }
      }
    }
  }
  r.seconds = timer.seconds();
  if (r.pass)
    r.detail = std::to_string(samples) + " random Levi conjugations per table";
  return r;
}

// Criterion: factor degrees plus suppressed standard blocks exhaust the
// centralizer on every row.
inline CheckResult check_degree_bookkeeping() {
  CheckResult r{"degree-bookkeeping"};
  verifydetail::Timer timer;
  for (CaseTag tag : all_case_tags()) {
    auto reg = SymbolRegistry::create();
    Derivation d = derive_full(default_spec(reg, tag));
    int suppressed = 0;
    if (tag == CaseTag::X || tag == CaseTag::XIb) suppressed = 4;
    if (tag == CaseTag::XIa) suppressed = 2;
    if (d.suppressed_degree != suppressed ||
        d.lfun.degree() + d.suppressed_degree != d.kernel_dim)
      verifydetail::fail(r, "case " + to_string(tag) +
                                ": degrees do not add up");
  }
  r.seconds = timer.seconds();
  if (r.pass) r.detail = "25 rows, factor degrees against centralizers";
  return r;
}

// Criterion: randomized algebra properties of the exact kernels underneath
// everything else.
inline CheckResult check_randomized_properties(std::uint64_t seed,
                                               int per_suite = 200) {
  CheckResult r{"randomized-properties"};
  verifydetail::Timer timer;
  std::mt19937_64 rng(seed);

  for (int i = 0; i < per_suite && r.pass; ++i) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    std::size_t rows = dim(rng), cols = dim(rng);
    RatMatrix m = verifydetail::random_matrix(rng, rows, cols);
    if (rank(m) + nullity(m) != cols)
      verifydetail::fail(r, "rank-nullity fails");
    RatMatrix reduced = rref(m);
    if (rref(reduced) != reduced) verifydetail::fail(r, "rref not idempotent");
    RatMatrix g = verifydetail::random_invertible(rng, rows);
    if (!same_row_space(m, g * m))
      verifydetail::fail(r, "row space moves under row operations");
  }

  auto reg = SymbolRegistry::create();
  for (int i = 0; i < per_suite && r.pass; ++i) {
    Character a = verifydetail::random_character(rng, reg);
    Character b = verifydetail::random_character(rng, reg);
    Character c = verifydetail::random_character(rng, reg);
    if ((a * b) * c != a * (b * c) || a * b != b * a ||
        !(a * a.inverse()).is_trivial() || a.pow(-2) != a.inverse().pow(2))
      verifydetail::fail(r, "character group axioms fail");
    if (parse_character(reg, a.to_string()) != a ||
        parse_character_latex(reg, a.to_latex()) != a)
      verifydetail::fail(r, "character round-trip fails");
  }

  const auto& basis = sp4_basis();
  for (int i = 0; i < per_suite && r.pass; ++i) {
    std::vector<Rat> coords;
    for (int k = 0; k < 10; ++k)
      coords.push_back(verifydetail::random_rat(rng));
    RatMatrix x = sp4_from_coordinates(coords);
    if (!in_sp4(x) || sp4_coordinates(x) != coords)
      verifydetail::fail(r, "sp(4) coordinates fail to round-trip");
    std::uniform_int_distribution<std::size_t> pick(0, 9);
    RatMatrix y = basis[pick(rng)], z = basis[pick(rng)];
    RatMatrix jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                    bracket(z, bracket(x, y));
    if (!jac.is_zero()) verifydetail::fail(r, "Jacobi identity fails");
  }

  r.seconds = timer.seconds();
  if (r.pass)
    r.detail = std::to_string(3 * per_suite) + " randomized instances";
  return r;
}

inline std::vector<CheckResult> run_verify(const std::string& scope,
                                           std::uint64_t seed) {
  std::vector<CheckResult> out;
  auto in_scope = [&](const char* s) { return scope == "all" || scope == s; };
  if (in_scope("tables")) out.push_back(check_adjoint_table_rows());
  if (in_scope("tables")) out.push_back(check_pole_orders());
  if (in_scope("gpr")) out.push_back(check_genericity());
  if (in_scope("linalg")) out.push_back(check_nilpotent_centralizers());
  if (in_scope("linalg")) out.push_back(check_siegel_family(seed));
  if (in_scope("tables")) out.push_back(check_admissibility());
  if (in_scope("twist")) out.push_back(check_twist_invariance(seed));
  if (in_scope("linalg")) out.push_back(check_levi_decompositions(seed));
  if (in_scope("tables")) out.push_back(check_degree_bookkeeping());
  if (in_scope("linalg")) out.push_back(check_randomized_properties(seed));
  return out;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

inline std::string format_check_line(const CheckResult& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << " " << r.name;
  out.precision(3);
  out << " (" << std::fixed << r.seconds << "s)";
  if (!r.detail.empty()) out << ": " << r.detail;
  return out.str();
}

}  // namespace gsp4ad
