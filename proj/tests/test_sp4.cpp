#include "gsp4ad/sp4.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace gsp4ad;

namespace {

std::vector<Rat> unit(std::size_t i, const Rat& v = Rat(1)) {
  std::vector<Rat> u(10, Rat(0));
  u[i] = v;
  return u;
}

std::vector<Rat> combine(std::size_t i, const Rat& vi, std::size_t j,
                         const Rat& vj) {
  std::vector<Rat> u(10, Rat(0));
  u[i] = vi;
  u[j] = vj;
  return u;
}

}  // namespace

TEST_CASE("symplectic form and basis membership") {
  RatMatrix j = {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}};
  REQUIRE(symplectic_form_j() == j);
  for (std::size_t k = 0; k < 10; ++k) {
    INFO(basis_name(k));
    REQUIRE(in_sp4(sp4_basis()[k]));
  }
  // the basis really is a basis: coordinates of basis_k are the k-th unit
  for (std::size_t k = 0; k < 10; ++k)
    REQUIRE(sp4_coordinates(sp4_basis()[k]) == unit(k));
}

TEST_CASE("matrices outside sp(4) are rejected") {
  RatMatrix e11(4, 4);
  e11.at(0, 0) = 1;
  REQUIRE(!in_sp4(e11));
  REQUIRE_THROWS_AS(sp4_coordinates(e11), std::domain_error);
  REQUIRE(!in_sp4(RatMatrix::identity(4)));
  REQUIRE(in_sp4(RatMatrix(4, 4)));
}

TEST_CASE("bracket worked example against literal matrices") {
  // [E12 - E34, E21 - E43] = diag(1,-1,1,-1) = h1 - h2
  RatMatrix x(4, 4), y(4, 4);
  x.at(0, 1) = 1;
  x.at(2, 3) = -1;
  y.at(1, 0) = 1;
  y.at(3, 2) = -1;
  RatMatrix expected(4, 4);
  expected.at(0, 0) = 1;
  expected.at(1, 1) = -1;
  expected.at(2, 2) = 1;
  expected.at(3, 3) = -1;
  REQUIRE(x * y - y * x == expected);
  REQUIRE(bracket(sp4_basis()[kLp1m2], sp4_basis()[kLm1p2]) == expected);
  REQUIRE(sp4_coordinates(expected) ==
          combine(kH1, Rat(1), kH2, Rat(-1)));
}

TEST_CASE("sp(4) is closed under bracket") {
  for (std::size_t a = 0; a < 10; ++a)
    for (std::size_t b = 0; b < 10; ++b)
      REQUIRE(in_sp4(bracket(sp4_basis()[a], sp4_basis()[b])));
}

TEST_CASE("ad matrix agrees with direct bracketing on random elements") {
  std::mt19937_64 rng(20240804);
  std::vector<StandardNilpotent> ns = {
      StandardNilpotent::zero(), StandardNilpotent::n1(),
      StandardNilpotent::n2(),   StandardNilpotent::n3(),
      StandardNilpotent::n4(),   StandardNilpotent::n5(),
      StandardNilpotent::siegel_sym(RatMatrix({{1, 2}, {2, -3}}))};
  for (const auto& n : ns) {
    RatMatrix ad = ad_in_basis(n);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rat> v(10);
      for (auto& c : v) c = testutil::random_rat(rng);
      RatMatrix x = sp4_from_coordinates(v);
      std::vector<Rat> direct = sp4_coordinates(bracket(n.matrix, x));
      RatMatrix vcol(10, 1);
      for (std::size_t i = 0; i < 10; ++i) vcol.at(i, 0) = v[i];
      RatMatrix image = ad * vcol;
      for (std::size_t i = 0; i < 10; ++i) REQUIRE(image.at(i, 0) == direct[i]);
    }
  }
}

TEST_CASE("centralizer dimensions of the standard nilpotents") {
  REQUIRE(kernel_of_ad_coords(StandardNilpotent::zero()).size() == 10);
  REQUIRE(kernel_of_ad_coords(StandardNilpotent::n1()).size() == 6);
  REQUIRE(kernel_of_ad_coords(StandardNilpotent::n2()).size() == 6);
  REQUIRE(kernel_of_ad_coords(StandardNilpotent::n3()).size() == 4);
  REQUIRE(kernel_of_ad_coords(StandardNilpotent::n4()).size() == 4);
  REQUIRE(kernel_of_ad_coords(StandardNilpotent::n5()).size() == 2);
}

TEST_CASE("centralizer spans match the expected generator lists") {
  auto span_of = [](const StandardNilpotent& n) {
    return from_rows(kernel_of_ad_coords(n));
  };

  RatMatrix n1_span = from_rows({unit(kH1), unit(kL2e1), unit(kLp1p2),
                                 unit(kL2e2), unit(kLm1p2), unit(kLm2e1)});
  REQUIRE(same_row_space(span_of(StandardNilpotent::n1()), n1_span));

  RatMatrix n2_span = from_rows({unit(kH2), unit(kL2e1), unit(kLp1p2),
                                 unit(kL2e2), unit(kLm2e2), unit(kLp1m2)});
  REQUIRE(same_row_space(span_of(StandardNilpotent::n2()), n2_span));

  RatMatrix n3_span =
      from_rows({unit(kL2e1), unit(kLp1p2), unit(kL2e2),
                 combine(kLp1m2, Rat(1), kLm1p2, Rat(-1))});
  REQUIRE(same_row_space(span_of(StandardNilpotent::n3()), n3_span));

  RatMatrix n4_span = from_rows({combine(kH1, Rat(1), kH2, Rat(1)),
                                 unit(kLm2e2), unit(kLp1m2), unit(kL2e1)});
  REQUIRE(same_row_space(span_of(StandardNilpotent::n4()), n4_span));

  RatMatrix n5_span =
      from_rows({unit(kL2e1), combine(kL2e2, Rat(1), kLp1m2, Rat(1))});
  REQUIRE(same_row_space(span_of(StandardNilpotent::n5()), n5_span));
}

TEST_CASE("centralizer bases really centralize") {
  for (const auto& n :
       {StandardNilpotent::n1(), StandardNilpotent::n3(),
        StandardNilpotent::n5(),
        StandardNilpotent::siegel_sym(RatMatrix({{2, 1}, {1, 1}}))}) {
    for (const auto& x : kernel_of_ad(n))
      REQUIRE(bracket(n.matrix, x).is_zero());
  }
}

TEST_CASE("symmetric-block nilpotent, worked examples") {
  RatMatrix id2 = RatMatrix::identity(2);
  REQUIRE(a0_matrix(id2) == RatMatrix({{0, 1}, {-1, 0}}));
  REQUIRE(a0_matrix(RatMatrix({{1, 0}, {0, 2}})) ==
          RatMatrix({{0, 2}, {-1, 0}}));

  // N(I) = [[0, w], [0, 0]] row by row
  StandardNilpotent n = StandardNilpotent::siegel_sym(id2);
  RatMatrix expected(4, 4);
  expected.at(0, 3) = 1;
  expected.at(1, 2) = 1;
  REQUIRE(n.matrix == expected);
  REQUIRE(in_sp4(n.matrix));
}

TEST_CASE("symmetric-block nilpotent over random S") {
  std::mt19937_64 rng(20240805);
  const RatMatrix w = StandardNilpotent::w2();
  for (int trial = 0; trial < 30; ++trial) {
    RatMatrix s = testutil::random_symmetric_invertible(rng, 2);
    StandardNilpotent n = StandardNilpotent::siegel_sym(s);
    REQUIRE(in_sp4(n.matrix));

    RatMatrix a0 = a0_matrix(s);
    RatMatrix b = w * s;
    // defining relation: A0 B = -B w tA0 w, equivalently A0 B = B A0'
    REQUIRE(a0 * b == -(b * (w * a0.transposed() * w)));
    REQUIRE(a0 * b == b * a0_prime(a0));
    REQUIRE(determinant(a0) != 0);

    RatMatrix fixed = embed_gl2_pair(a0, a0_prime(a0));
    REQUIRE(in_sp4(fixed));
    REQUIRE(bracket(n.matrix, fixed).is_zero());

    auto kernel = kernel_of_ad_coords(n);
    REQUIRE(kernel.size() == 4);
    REQUIRE(rank(ad_in_basis(n)) == 6);
    RatMatrix span = from_rows(kernel);
    REQUIRE(row_space_contains(span, unit(kL2e1)));
    REQUIRE(row_space_contains(span, unit(kLp1p2)));
    REQUIRE(row_space_contains(span, unit(kL2e2)));
    REQUIRE(row_space_contains(span, sp4_coordinates(fixed)));
  }
}

TEST_CASE("symmetric-block nilpotent rejects bad S") {
  REQUIRE_THROWS_AS(StandardNilpotent::siegel_sym(RatMatrix({{0, 1}, {2, 0}})),
                    std::domain_error);
  REQUIRE_THROWS_AS(StandardNilpotent::siegel_sym(RatMatrix({{1, 1}, {1, 1}})),
                    std::domain_error);
  REQUIRE_THROWS_AS(a0_matrix(RatMatrix({{1, 1}, {1, 1}})), std::domain_error);
  REQUIRE_THROWS_AS(StandardNilpotent::siegel_sym(RatMatrix::identity(3)),
                    std::domain_error);
}

TEST_CASE("nilpotent matrices match their entry patterns") {
  REQUIRE(StandardNilpotent::n1().matrix ==
          RatMatrix({{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
  REQUIRE(StandardNilpotent::n2().matrix ==
          RatMatrix({{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
  REQUIRE(StandardNilpotent::n3().matrix ==
          StandardNilpotent::n1().matrix + StandardNilpotent::n2().matrix);
  REQUIRE(StandardNilpotent::n4().matrix ==
          RatMatrix({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 0, 0}}));
  REQUIRE(StandardNilpotent::n5().matrix ==
          StandardNilpotent::n4().matrix + StandardNilpotent::n1().matrix);
  for (const auto& n : {StandardNilpotent::n1(), StandardNilpotent::n2(),
                        StandardNilpotent::n3(), StandardNilpotent::n4(),
                        StandardNilpotent::n5()}) {
    REQUIRE(in_sp4(n.matrix));
    // nilpotency: N^4 = 0 inside 4x4 matrices
    REQUIRE((n.matrix * n.matrix * n.matrix * n.matrix).is_zero());
  }
}
