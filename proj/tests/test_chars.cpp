#include "gsp4ad/chars.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace gsp4ad;

TEST_CASE("character group axioms on random elements") {
  auto reg = SymbolRegistry::create();
  std::mt19937_64 rng(20240806);
  for (int trial = 0; trial < 200; ++trial) {
    Character a = testutil::random_character(rng, reg);
    Character b = testutil::random_character(rng, reg);
    Character c = testutil::random_character(rng, reg);
    Character one = Character::trivial(reg);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE(a * one == a);
    REQUIRE(a * a.inverse() == one);
    REQUIRE(a.pow(3) == a * a * a);
    REQUIRE(a.pow(-2) == (a * a).inverse());
    REQUIRE(a.pow(0).is_trivial());
  }
}

TEST_CASE("torsion symbols reduce modulo their order") {
  auto reg = SymbolRegistry::create();
  Character xi = Character::symbol(reg, "xi", 2);
  REQUIRE(xi.pow(2).is_trivial());
  REQUIRE(xi.pow(3) == xi);
  REQUIRE(xi.inverse() == xi);
  REQUIRE(xi.pow(-5) == xi);
  Character zeta = Character::symbol(reg, "zeta", 3);
  REQUIRE(zeta.pow(3).is_trivial());
  REQUIRE(zeta.inverse() == zeta.pow(2));
}

TEST_CASE("worked product expansion") {
  auto reg = SymbolRegistry::create();
  Character chi1 = Character::symbol(reg, "chi1");
  Character chi2 = Character::symbol(reg, "chi2");
  Character sigma = Character::symbol(reg, "sigma");
  // (chi1 chi2 sigma^2)^2 computed two ways
  Character route_a = (chi1 * chi2 * sigma.pow(2)).pow(2);
  Character route_b =
      chi1.pow(2) * chi2.pow(2) * sigma.pow(4);
  REQUIRE(route_a == route_b);
  REQUIRE(route_a.to_string() == "chi1^2*chi2^2*sigma^4");
}

TEST_CASE("nu powers") {
  auto reg = SymbolRegistry::create();
  Character half = Character::nu_power(reg, rat(1, 2));
  REQUIRE(half * half == Character::nu_power(reg, rat(1)));
  REQUIRE(half.is_nu_power() == rat(1, 2));
  REQUIRE(Character::trivial(reg).is_nu_power() == rat(0));
  Character chi = Character::symbol(reg, "chi");
  REQUIRE(!(chi * half).is_nu_power().has_value());
  REQUIRE((chi * half * chi.inverse()).is_nu_power() == rat(1, 2));
  REQUIRE(Character::nu_power(reg, rat(-3, 2)).to_string() == "nu^(-3/2)");
  REQUIRE(Character::nu_power(reg, rat(-1)).to_string() == "nu^-1");
  REQUIRE(half.times_nu(rat(-1, 2)).is_trivial());
}

TEST_CASE("canonical rendering") {
  auto reg = SymbolRegistry::create();
  Character chi = Character::symbol(reg, "chi");
  Character sigma = Character::symbol(reg, "sigma");
  Character xi = Character::symbol(reg, "xi", 2);
  Character nu_half = Character::nu_power(reg, rat(1, 2));
  REQUIRE((nu_half * sigma * chi).to_string() == "nu^(1/2)*chi*sigma");
  REQUIRE((chi.pow(-2)).to_string() == "chi^-2");
  REQUIRE((xi * Character::nu_power(reg, rat(1))).to_string() == "nu*xi[2]");
  REQUIRE(Character::trivial(reg).to_string() == "1");
  REQUIRE(Character::trivial(reg).to_latex() == "1_{F^\\times}");
  REQUIRE((nu_half * chi * sigma).to_latex() == "\\nu^{1/2}\\chi\\sigma");
  REQUIRE(Character::symbol(reg, "chi1").to_latex() == "\\chi_1");
  REQUIRE(Character::symbol(reg, "omega_pi").to_latex() == "\\omega_\\pi");
  REQUIRE(chi.pow(-1).to_latex() == "\\chi^{-1}");
  REQUIRE(Character::nu_power(reg, rat(2)).to_latex() == "\\nu^{2}");
}

TEST_CASE("substitution is a homomorphism") {
  auto reg = SymbolRegistry::create();
  std::mt19937_64 rng(20240807);
  Character target_a = Character::nu_power(reg, rat(1));
  Character target_xi = Character::trivial(reg);
  std::map<std::string, Character> sub = {{"a", target_a}, {"xi", target_xi}};
  for (int trial = 0; trial < 200; ++trial) {
    Character x = testutil::random_character(rng, reg);
    Character y = testutil::random_character(rng, reg);
    REQUIRE((x * y).substitute(sub) == x.substitute(sub) * y.substitute(sub));
    REQUIRE(x.substitute({}) == x);
    REQUIRE(x.inverse().substitute(sub) == x.substitute(sub).inverse());
  }
}

TEST_CASE("substitution worked example") {
  auto reg = SymbolRegistry::create();
  Character chi = Character::symbol(reg, "chi");
  Character nu = Character::nu_power(reg, rat(1));
  REQUIRE((chi * nu).substitute({{"chi", nu}}) ==
          Character::nu_power(reg, rat(2)));
  REQUIRE((chi * nu).substitute({{"chi", nu.inverse()}}).is_trivial());
}

TEST_CASE("substitution rejects bad assignments") {
  auto reg = SymbolRegistry::create();
  Character chi = Character::symbol(reg, "chi");
  Character rho = Character::symbol(reg, "rho");
  Character xi = Character::symbol(reg, "xi", 2);
  // target mentions a substituted symbol
  REQUIRE_THROWS_AS(
      chi.substitute({{"chi", rho}, {"rho", Character::trivial(reg)}}),
      std::invalid_argument);
  // torsion incompatibility: xi has order 2, nu does not
  REQUIRE_THROWS_AS(xi.substitute({{"xi", Character::nu_power(reg, rat(1))}}),
                    std::domain_error);
  // order-2 target for an order-2 symbol is fine
  Character eta = Character::symbol(reg, "eta", 2);
  REQUIRE(xi.substitute({{"xi", eta}}) == eta);
  REQUIRE_THROWS_AS(chi.substitute({{"nope", rho}}), std::invalid_argument);
}

TEST_CASE("registry rules") {
  auto reg = SymbolRegistry::create();
  reg->intern("xi", 2);
  REQUIRE_THROWS_AS(reg->intern("xi", 3), std::invalid_argument);
  REQUIRE(reg->intern("xi", 2) == reg->intern("xi"));
  REQUIRE_THROWS_AS(Character::symbol(reg, "nu"), std::invalid_argument);
  REQUIRE_THROWS_AS(Character::symbol(reg, "2bad"), std::invalid_argument);
  REQUIRE_THROWS_AS(Character::symbol(reg, "no spaces"), std::invalid_argument);
  REQUIRE_THROWS_AS(reg->intern("t", 1), std::invalid_argument);

  auto other = SymbolRegistry::create();
  Character a = Character::symbol(reg, "a");
  Character b = Character::symbol(other, "a");
  REQUIRE_THROWS_AS(a * b, std::invalid_argument);
  REQUIRE_THROWS_AS(a == b, std::invalid_argument);
}

TEST_CASE("supercuspidal bookkeeping") {
  auto reg = SymbolRegistry::create();
  auto pi = SupercuspidalGL2::make(reg, "pi");
  REQUIRE(pi.omega == Character::symbol(reg, "omega_pi"));
  REQUIRE(pi.twist.is_trivial());
  REQUIRE(pi.self_twist_ids.empty());

  auto pi_xi = SupercuspidalGL2::make(reg, "pi2", std::nullopt, {"xi"});
  REQUIRE(pi_xi.has_self_twist(Character::symbol(reg, "xi", 2)));
  REQUIRE(!pi_xi.has_self_twist(Character::symbol(reg, "eta", 2)));
  REQUIRE(pi_xi.self_twist_characters().size() == 1);

  Character tau = Character::symbol(reg, "tau");
  auto twisted = pi.twisted(tau);
  REQUIRE(twisted.omega == pi.omega * tau.pow(2));
  REQUIRE(twisted.twist == tau);
  REQUIRE(twisted.name == pi.name);
  auto twice = twisted.twisted(tau.inverse());
  REQUIRE(twice.omega == pi.omega);
  REQUIRE(twice.twist.is_trivial());
  REQUIRE(twice == pi);

  // an omega from a foreign registry is rejected
  auto other = SymbolRegistry::create();
  REQUIRE_THROWS_AS(
      SupercuspidalGL2::make(reg, "pi3", Character::symbol(other, "w")),
      std::invalid_argument);
}
