#include <doctest.h>

#include "hilb/macdonald.hpp"

using namespace hilb;
using Poly = MultiPoly<Rational>;

namespace {

Poly qt(std::initializer_list<std::tuple<long, int, int>> terms) {
  Poly p(RationalFunction::vars());
  for (auto [c, a, b] : terms) p.addTerm({a, b}, Rational(c));
  return p;
}

RF rf(std::initializer_list<std::tuple<long, int, int>> terms) { return RF(qt(terms)); }

}  // namespace

TEST_CASE("power sums to monomials") {
  auto r2 = powerToMonomial(2);
  CHECK(r2[0] == std::vector<Rational>{1, 0});
  CHECK(r2[1] == std::vector<Rational>{1, 2});
  // p_{21} = m_3 + m_{21}; p_{111} = m_3 + 3 m_{21} + 6 m_{111}
  auto r3 = powerToMonomial(3);
  CHECK(r3[1] == std::vector<Rational>{1, 1, 0});
  CHECK(r3[2] == std::vector<Rational>{1, 3, 6});
  // e_2 = m_{11} = (p_1^2 - p_2)/2
  SymFunc e2 = monomialSym(Partition({1, 1}));
  CHECK(e2.coeff(Partition({1, 1})) == RF(Rational(1, 2)));
  CHECK(e2.coeff(Partition({2})) == RF(Rational(-1, 2)));
}

TEST_CASE("small modified Macdonald polynomials") {
  auto h2 = macdonaldMonomialCoefficients(Partition({2}));
  CHECK(h2[0] == qt({{1, 0, 0}}));
  CHECK(h2[1] == qt({{1, 0, 0}, {1, 1, 0}}));
  auto h11 = macdonaldMonomialCoefficients(Partition({1, 1}));
  CHECK(h11[1] == qt({{1, 0, 0}, {1, 0, 1}}));
  auto h21 = macdonaldMonomialCoefficients(Partition({2, 1}));
  CHECK(h21[0] == qt({{1, 0, 0}}));
  CHECK(h21[1] == qt({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}));
  CHECK(h21[2] == qt({{1, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 1, 1}}));
  // H_(n) at q = 1 is h_1^n; H_(1^n) at t = 1 likewise
  SymFunc h2p = modifiedMacdonald(Partition({2}));
  CHECK(h2p.coeff(Partition({1, 1})) == rf({{1, 0, 0}, {1, 1, 0}}) * RF(Rational(1, 2)));
  CHECK(h2p.coeff(Partition({2})) == rf({{1, 0, 0}, {-1, 1, 0}}) * RF(Rational(1, 2)));
}

TEST_CASE("q,t symmetry and specializations") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& mu : partitionsOf(n)) {
      auto a = macdonaldMonomialCoefficients(mu);
      auto b = macdonaldMonomialCoefficients(mu.conjugate());
      for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i] == b[i].transform([](const Exponent& e) { return Exponent{e[1], e[0]}; }, [](const Rational& c) { return c; }));
      CHECK(verifyProductSpecialization(mu).pass);
      CHECK(verifyOneVariable(mu).pass);
    }
}

TEST_CASE("plethystic exponential") {
  Alphabet a = Alphabet::variable({"x"}, 0);
  auto e = plethysticExp(a, {5});
  for (int i = 0; i <= 5; ++i) CHECK(e.coeff({i}) == RF(Rational(1)));
  Alphabet b = a * RF::q();
  auto f = plethysticExp(b, {4});
  for (int i = 0; i <= 4; ++i) CHECK(f.coeff({i}) == RF::monomial(Rational(1), i, 0));
  // Exp[-x] = 1 - x
  auto g = plethysticExp(-a, {4});
  CHECK(g.coeff({1}) == RF(Rational(-1)));
  CHECK(g.coeff({2}).zero());
  // Exp[x/(1-q)] = sum x^n/(q;q)_n
  auto h = plethysticExp(a * RF::oneMinusInverse(1, 0), {2});
  CHECK(h.coeff({1}) == RF::oneMinusInverse(1, 0));
  CHECK(h.coeff({2}) == RF::oneMinusInverse(1, 0) * RF::oneMinusInverse(2, 0));
  CHECK_THROWS_AS(plethysticExp(Alphabet({"x"}, RF(Rational(1))), {3}), Error);
}

TEST_CASE("Cauchy identity") {
  for (int n = 1; n <= 4; ++n) {
    auto r = verifyCauchy(n);
    CHECK_MESSAGE(r.pass, r.firstDiscrepancy);
  }
}

TEST_CASE("Garsia-Tesler") {
  for (const auto& mu : partitionsUpTo(2)) {
    auto r = verifyGarsiaTesler(mu, 3);
    CHECK_MESSAGE(r.pass, r.firstDiscrepancy);
  }
}

TEST_CASE("Koornwinder") {
  for (const auto& mu : partitionsUpTo(2))
    for (const auto& nu : partitionsUpTo(3)) {
      auto r = verifyKoornwinder(mu, nu);
      CHECK_MESSAGE(r.pass, r.firstDiscrepancy);
    }
}
