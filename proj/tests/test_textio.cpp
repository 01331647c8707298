#include "gsp4ad/textio.hpp"

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "gsp4ad/engine.hpp"
#include "testutil.hpp"

using namespace gsp4ad;

TEST_CASE("plain character expressions round-trip") {
  auto reg = SymbolRegistry::create();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Character c = testutil::random_character(rng, reg);
    REQUIRE(parse_character(reg, c.to_string()) == c);
  }
}

TEST_CASE("latex character expressions round-trip") {
  auto reg = SymbolRegistry::create();
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    Character c = testutil::random_character(rng, reg);
    REQUIRE(parse_character_latex(reg, c.to_latex()) == c);
  }
}

TEST_CASE("worked character parses") {
  auto reg = SymbolRegistry::create();
  Character nu = Character::nu_power(reg, Rat(1));
  Character chi = Character::symbol(reg, "chi");
  Character sigma = Character::symbol(reg, "sigma");
  Character xi = Character::symbol(reg, "xi", 2);

  REQUIRE(parse_character(reg, "1") == Character::trivial(reg));
  REQUIRE(parse_character(reg, "nu^(1/2)*chi*sigma") ==
          (chi * sigma).times_nu(rat(1, 2)));
  REQUIRE(parse_character(reg, "nu^-1") == nu.inverse());
  REQUIRE(parse_character(reg, "nu^(-3/2)") ==
          Character::nu_power(reg, rat(-3, 2)));
  REQUIRE(parse_character(reg, "xi[2]") == xi);
  REQUIRE(parse_character(reg, "xi") == xi);
  REQUIRE(parse_character(reg, "chi^-2*nu") == chi.pow(-2).times_nu(Rat(1)));

  REQUIRE(parse_character_latex(reg, "1_{F^\\times}") ==
          Character::trivial(reg));
  REQUIRE(parse_character_latex(reg, "\\nu^{1/2}\\chi\\sigma") ==
          (chi * sigma).times_nu(rat(1, 2)));
  REQUIRE(parse_character_latex(reg, "\\nu\\xi") == xi.times_nu(Rat(1)));
  REQUIRE(parse_character_latex(reg, "\\chi_1^{-1}\\chi_2") ==
          Character::symbol(reg, "chi1").inverse() *
              Character::symbol(reg, "chi2"));
  REQUIRE(parse_character_latex(reg, "\\omega_\\pi^{-1}") ==
          Character::symbol(reg, "omega_pi").inverse());
  REQUIRE(parse_character_latex(reg, "\\mathrm{a}^{3}") ==
          Character::symbol(reg, "a").pow(3));
}

TEST_CASE("character parse errors carry positions") {
  auto reg = SymbolRegistry::create();
  auto pos_of = [&](std::string_view text) {
    try {
      parse_character(reg, text);
    } catch (const ParseError& e) {
      return e.pos;
    }
    return std::size_t(-1);
  };
  REQUIRE(pos_of("") == 0);
  REQUIRE(pos_of("chi**sigma") == 4);
  REQUIRE(pos_of("nu^(1/2") == 7);
  REQUIRE(pos_of("xi[1]") == 3);
  REQUIRE(pos_of("chi^x") == 4);
  REQUIRE(pos_of("nu^(1/0)") == 6);
  REQUIRE(pos_of("chi sigma") == 3);

  Character::symbol(reg, "rho", 2);
  REQUIRE_THROWS_AS(parse_character(reg, "rho[3]"), ParseError);
}

TEST_CASE("plain L-function strings round-trip") {
  auto reg = SymbolRegistry::create();
  Character nu = Character::nu_power(reg, Rat(1));
  Character chi = Character::symbol(reg, "chi");
  SupercuspidalGL2 pi = SupercuspidalGL2::make(reg, "pi", std::nullopt, {"xi"});
  PiTable pis = {{"pi", pi}};

  LFunction l;
  l.add(CharAtom{Character::trivial(reg)}, 2);
  l.add(CharAtom{chi.times_nu(rat(1, 2))});
  l.add(AdGL2Atom(pi, Character::symbol(reg, "xi").times_nu(Rat(1))));
  l.add(AdGL2Atom(pi, Character::trivial(reg)), 3);
  l.add(CharAtom{nu.pow(-1)});

  REQUIRE(parse_lfunction_plain(reg, l.render_plain(), pis) == l);
  REQUIRE(parse_lfunction_plain(reg, "1") == LFunction());
  REQUIRE(LFunction().render_plain() == "1");
}

TEST_CASE("latex L-function strings round-trip") {
  auto reg = SymbolRegistry::create();
  Character chi = Character::symbol(reg, "chi");
  SupercuspidalGL2 pi = SupercuspidalGL2::make(reg, "pi", std::nullopt, {"xi"});
  PiTable pis = {{"pi", pi}};

  LFunction l;
  l.add(CharAtom{Character::trivial(reg)}, 2);
  l.add(CharAtom{chi.times_nu(rat(-1, 2)).pow(1)});
  l.add(AdGL2Atom(pi, Character::symbol(reg, "xi").times_nu(Rat(1))));
  l.add(AdGL2Atom(pi, chi.inverse()));
  REQUIRE(parse_lfunction_latex(reg, l.render_latex(), pis) == l);
}

TEST_CASE("latex parser tolerates the {\\rm ...} convention") {
  auto reg = SymbolRegistry::create();
  SupercuspidalGL2 pi = SupercuspidalGL2::make(reg, "pi");
  PiTable pis = {{"pi", pi}};

  LFunction expect;
  expect.add(CharAtom{Character::trivial(reg)});
  expect.add(AdGL2Atom(pi, Character::symbol(reg, "chi")));
  REQUIRE(parse_lfunction_latex(
              reg,
              "L(s,1_{F^{\\times}})L(s,\\pi,{\\rm Ad}_{{\\rm GL}(2)}"
              "\\otimes\\chi)",
              pis) == expect);
  REQUIRE(parse_lfunction_latex(
              reg, "L(s,\\pi,{\\rm Ad}_{\\rm GL(2)})", pis) ==
          parse_lfunction_latex(reg, "L(s,\\pi,\\mathrm{Ad}_{\\mathrm{GL}(2)})",
                                pis));
}

TEST_CASE("all derived rows survive a latex round-trip") {
  for (CaseTag tag : all_case_tags()) {
    INFO("case " << to_string(tag));
    auto reg = SymbolRegistry::create();
    RepSpec spec = default_spec(reg, tag);
    PiTable pis;
    if (spec.pi) pis.emplace(spec.pi->name, *spec.pi);
    LFunction l = derive(spec);
    REQUIRE(parse_lfunction_latex(reg, l.render_latex(), pis) == l);
    REQUIRE(parse_lfunction_plain(reg, l.render_plain(), pis) == l);
  }
}

TEST_CASE("L-function parse errors") {
  auto reg = SymbolRegistry::create();
  REQUIRE_THROWS_AS(parse_lfunction_plain(reg, "L(s,chi"), ParseError);
  REQUIRE_THROWS_AS(parse_lfunction_plain(reg, "L(s,chi)^0"), ParseError);
  REQUIRE_THROWS_AS(parse_lfunction_plain(reg, "X(s,1)"), ParseError);
  REQUIRE_THROWS_AS(parse_lfunction_plain(reg, "L(s,Ad(pi)+chi)"), ParseError);
  REQUIRE_THROWS_AS(parse_lfunction_latex(reg, "L(s,\\pi,\\chi)"), ParseError);
}

TEST_CASE("json rendering follows the schema") {
  auto reg = SymbolRegistry::create();

  SECTION("IXa") {
    RepSpec spec = default_spec(reg, CaseTag::IXa);
    LFunction l = derive(spec);
    PoleReport report = pole_report(l, constraints_for(spec));
    nlohmann::ordered_json j = report_json(l, report);
    REQUIRE(j["atoms"].size() == 2);
    REQUIRE(j["atoms"][0]["kind"] == "ad_gl2");
    REQUIRE(j["atoms"][0]["pi"] == "pi");
    REQUIRE(j["atoms"][0]["twist"] == "nu*xi[2]");
    REQUIRE(j["atoms"][1]["kind"] == "char");
    REQUIRE(j["atoms"][1]["expr"] == "xi[2]");
    REQUIRE(j["ord_s1"] == 0);
    REQUIRE(j["branches"].empty());
    REQUIRE(nlohmann::ordered_json::parse(j.dump()) == j);
  }

  SECTION("IIIb") {
    RepSpec spec = default_spec(reg, CaseTag::IIIb);
    LFunction l = derive(spec);
    PoleReport report = pole_report(l, constraints_for(spec));
    nlohmann::ordered_json j = report_json(l, report);
    REQUIRE(j["atoms"].size() == 10);
    int trivial_count = 0;
    for (const auto& a : j["atoms"]) {
      REQUIRE(a["kind"] == "char");
      if (a["expr"] == "1") ++trivial_count;
    }
    REQUIRE(trivial_count == 2);
    REQUIRE(j["ord_s1"] == 1);
    REQUIRE(j["branches"].size() == 2);
    REQUIRE(j["branches"][0] ==
            nlohmann::ordered_json(
                {{"symbol", "chi"}, {"value", "nu^-1"}, {"ord_s1", 2}}));
    REQUIRE(j["branches"][1] ==
            nlohmann::ordered_json(
                {{"symbol", "chi"}, {"value", "nu"}, {"ord_s1", 2}}));
  }
}

TEST_CASE("spec grammar round-trips every case") {
  for (CaseTag tag : all_case_tags()) {
    INFO("case " << to_string(tag));
    auto reg = SymbolRegistry::create();
    RepSpec spec = default_spec(reg, tag);
    RepSpec back = with_defaults(parse_spec(reg, print_spec(spec)));
    REQUIRE(back == spec);
  }
}

TEST_CASE("partial specs pick up defaults") {
  auto reg = SymbolRegistry::create();
  REQUIRE(with_defaults(parse_spec(reg, "case=IIa")) ==
          default_spec(reg, CaseTag::IIa));

  RepSpec spec = with_defaults(parse_spec(reg, "case=IIa chi=nu^(1/2)"));
  auto violations = validate(spec);
  REQUIRE(violations.size() == 1);
  REQUIRE(violations[0] == "chi^2 != nu^(+-1)");

  RepSpec ok = with_defaults(parse_spec(reg, "case=IIa chi=a"));
  REQUIRE(validate(ok).empty());
  REQUIRE(*ok.chi == Character::symbol(reg, "a"));
  REQUIRE(*ok.sigma == Character::symbol(reg, "sigma"));
}

TEST_CASE("spec grammar errors") {
  auto reg = SymbolRegistry::create();
  REQUIRE_THROWS_AS(parse_spec(reg, "case=Q"), ParseError);
  REQUIRE_THROWS_AS(parse_spec(reg, "chi=chi"), ParseError);
  REQUIRE_THROWS_AS(parse_spec(reg, "case=I case=I"), ParseError);
  REQUIRE_THROWS_AS(parse_spec(reg, "bogus"), ParseError);
  REQUIRE_THROWS_AS(parse_spec(reg, "omega=1"), ParseError);
  REQUIRE_THROWS_AS(parse_spec(reg, "case=I frob=1"), ParseError);
  REQUIRE_THROWS_AS(parse_spec(reg, "case=VII pi=pi!"), ParseError);

  try {
    parse_spec(reg, "case=IIa chi=nu^");
  } catch (const ParseError& e) {
    REQUIRE(e.pos == 16);
  }
}

TEST_CASE("unexpected inputs surface through validation, not parsing") {
  auto reg = SymbolRegistry::create();
  RepSpec spec = with_defaults(parse_spec(reg, "case=VII sigma=sigma chi=chi"));
  auto violations = validate(spec);
  REQUIRE(!violations.empty());
  REQUIRE(violations[0] == "unexpected input 'sigma' for case VII");
}
