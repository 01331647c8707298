#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsp4ad/matrix.hpp"

namespace gsp4ad {

// Symplectic Lie algebra of the form J = antidiag(1,1,-1,-1):
// sp(4) = { X : tX J + J X = 0 }, dimension 10.

inline const RatMatrix& symplectic_form_j() {
  static const RatMatrix j = {
      {0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}};
  return j;
}

inline bool in_sp4(const RatMatrix& x) {
  if (x.rows() != 4 || x.cols() != 4) return false;
  const RatMatrix& j = symplectic_form_j();
  return (x.transposed() * j + j * x).is_zero();
}

inline RatMatrix bracket(const RatMatrix& x, const RatMatrix& y) {
  return x * y - y * x;
}

// A short root vector's weight n1 e1 + n2 e2; torus directions carry none.
struct Root {
  int n1, n2;
  bool operator==(const Root&) const = default;
};

// Basis order is fixed; every kernel computation reports coordinates in it.
enum BasisIndex : std::size_t {
  kLp1m2 = 0,   // L(e1-e2)   = E12 - E34
  kLm1p2 = 1,   // L(-e1+e2)  = E21 - E43
  kLp1p2 = 2,   // L(e1+e2)   = E13 + E24
  kLm1m2 = 3,   // L(-e1-e2)  = E31 + E42
  kL2e1 = 4,    // L(2e1)     = E14
  kLm2e1 = 5,   // L(-2e1)    = E41
  kL2e2 = 6,    // L(2e2)     = E23
  kLm2e2 = 7,   // L(-2e2)    = E32
  kH1 = 8,      // diag(1,0,0,-1)
  kH2 = 9,      // diag(0,1,-1,0)
};

inline const std::array<RatMatrix, 10>& sp4_basis() {
  static const std::array<RatMatrix, 10> basis = [] {
    auto e = [](std::size_t i, std::size_t j) {
      RatMatrix m(4, 4);
      m.at(i, j) = 1;
      return m;
    };
    return std::array<RatMatrix, 10>{
        e(0, 1) - e(2, 3), e(1, 0) - e(3, 2), e(0, 2) + e(1, 3),
        e(2, 0) + e(3, 1), e(0, 3),           e(3, 0),
        e(1, 2),           e(2, 1),           e(0, 0) - e(3, 3),
        e(1, 1) - e(2, 2)};
  }();
  return basis;
}

inline const std::array<std::optional<Root>, 10>& basis_roots() {
  static const std::array<std::optional<Root>, 10> roots = {
      Root{1, -1}, Root{-1, 1}, Root{1, 1}, Root{-1, -1}, Root{2, 0},
      Root{-2, 0}, Root{0, 2},  Root{0, -2}, std::nullopt, std::nullopt};
  return roots;
}

inline std::string basis_name(std::size_t i) {
  static const std::array<std::string, 10> names = {
      "L(e1-e2)", "L(-e1+e2)", "L(e1+e2)", "L(-e1-e2)", "L(2e1)",
      "L(-2e1)",  "L(2e2)",    "L(-2e2)",  "h1",        "h2"};
  return names.at(i);
}

inline RatMatrix sp4_from_coordinates(const std::vector<Rat>& coords) {
  if (coords.size() != 10)
    throw std::invalid_argument("sp4_from_coordinates: need 10 coordinates");
  RatMatrix x(4, 4);
  const auto& basis = sp4_basis();
  for (std::size_t k = 0; k < 10; ++k)
    if (coords[k] != 0) x = x + basis[k].scaled(coords[k]);
  return x;
}

// The ten basis elements occupy disjoint entry patterns, so coordinates can
// be read straight off the matrix; reconstruction mismatch means x is not in
// the span, i.e. not in sp(4).
inline std::vector<Rat> sp4_coordinates(const RatMatrix& x) {
  if (x.rows() != 4 || x.cols() != 4)
    throw std::domain_error("sp4_coordinates: not a 4x4 matrix");
  std::vector<Rat> coords = {x.at(0, 1), x.at(1, 0), x.at(0, 2), x.at(2, 0),
                             x.at(0, 3), x.at(3, 0), x.at(1, 2), x.at(2, 1),
                             x.at(0, 0), x.at(1, 1)};
  if (sp4_from_coordinates(coords) != x)
    throw std::domain_error("sp4_coordinates: matrix is not in sp(4)");
  return coords;
}

enum class NilpotentTag { Zero, N1, N2, N3, N4, N5, SiegelSym };

inline std::string to_string(NilpotentTag t) {
  switch (t) {
    case NilpotentTag::Zero: return "0";
    case NilpotentTag::N1: return "N1";
    case NilpotentTag::N2: return "N2";
    case NilpotentTag::N3: return "N3";
    case NilpotentTag::N4: return "N4";
    case NilpotentTag::N5: return "N5";
    case NilpotentTag::SiegelSym: return "N(S)";
  }
  return "?";
}

struct StandardNilpotent {
  NilpotentTag tag;
  RatMatrix matrix;                // 4x4, in sp(4)
  std::optional<RatMatrix> s;      // SiegelSym only

  static StandardNilpotent zero() {
    return {NilpotentTag::Zero, RatMatrix(4, 4), std::nullopt};
  }
  static StandardNilpotent n1() {
    return {NilpotentTag::N1, single(1, 2), std::nullopt};
  }
  static StandardNilpotent n2() {
    return {NilpotentTag::N2, single(0, 3), std::nullopt};
  }
  static StandardNilpotent n3() {
    return {NilpotentTag::N3, single(0, 3) + single(1, 2), std::nullopt};
  }
  static StandardNilpotent n4() {
    return {NilpotentTag::N4, single(0, 1) - single(2, 3), std::nullopt};
  }
  static StandardNilpotent n5() {
    return {NilpotentTag::N5, single(0, 1) + single(1, 2) - single(2, 3),
            std::nullopt};
  }

  // N(S) = [[0, wS], [0, 0]] for S symmetric invertible, w = antidiag(1,1).
  static StandardNilpotent siegel_sym(const RatMatrix& s) {
    if (s.rows() != 2 || s.cols() != 2 || !s.is_symmetric())
      throw std::domain_error("siegel_sym: S must be symmetric 2x2");
    if (determinant(s) == 0)
      throw std::domain_error("siegel_sym: S must be invertible");
    RatMatrix b = w2() * s;
    RatMatrix n(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) n.at(i, 2 + j) = b.at(i, j);
    return {NilpotentTag::SiegelSym, n, s};
  }

  static RatMatrix w2() { return RatMatrix({{0, 1}, {1, 0}}); }

 private:
  static RatMatrix single(std::size_t i, std::size_t j) {
    RatMatrix m(4, 4);
    m.at(i, j) = 1;
    return m;
  }
};

// Matrix of ad(N) on sp(4) in the fixed basis: column k holds the
// coordinates of [N, basis_k].
inline RatMatrix ad_in_basis(const StandardNilpotent& n) {
  RatMatrix ad(10, 10);
  const auto& basis = sp4_basis();
  for (std::size_t k = 0; k < 10; ++k) {
    std::vector<Rat> col = sp4_coordinates(bracket(n.matrix, basis[k]));
    for (std::size_t i = 0; i < 10; ++i) ad.at(i, k) = col[i];
  }
  return ad;
}

inline std::vector<std::vector<Rat>> kernel_of_ad_coords(
    const StandardNilpotent& n) {
  return kernel_basis(ad_in_basis(n));
}

inline std::vector<RatMatrix> kernel_of_ad(const StandardNilpotent& n) {
  std::vector<RatMatrix> out;
  for (const auto& v : kernel_of_ad_coords(n)) out.push_back(sp4_from_coordinates(v));
  return out;
}

// Invertible A0 with [[A0,0],[0,A0']] in the kernel of ad N(S), where
// A0' = -w tA0 w is forced by the sp(4) condition.
inline RatMatrix a0_matrix(const RatMatrix& s) {
  if (s.rows() != 2 || s.cols() != 2 || !s.is_symmetric() ||
      determinant(s) == 0)
    throw std::domain_error("a0_matrix: S must be symmetric invertible 2x2");
  return StandardNilpotent::w2() * s * RatMatrix({{-1, 0}, {0, 1}});
}

inline RatMatrix a0_prime(const RatMatrix& a0) {
  const RatMatrix w = StandardNilpotent::w2();
  return -(w * a0.transposed() * w);
}

inline RatMatrix embed_gl2_pair(const RatMatrix& upper, const RatMatrix& lower) {
  if (upper.rows() != 2 || upper.cols() != 2 || lower.rows() != 2 ||
      lower.cols() != 2)
    throw std::invalid_argument("embed_gl2_pair: need 2x2 blocks");
  RatMatrix m(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m.at(i, j) = upper.at(i, j);
      m.at(2 + i, 2 + j) = lower.at(i, j);
    }
  return m;
}

}  // namespace gsp4ad
