#include "doctest.h"

#include "bgpoly/poly.hpp"

using namespace bgpoly;

namespace {

// the two printed polynomials of the degree-17 example, constant term first
const IntPolynomial kW = IntPolynomial::parse("1,32,336,1420,2534,1946,658,86,3");
const IntPolynomial kH = IntPolynomial::parse(
    "1,145,7432,174888,2128332,14547884,59233240,148792184,234916470,"
    "234916470,148792184,59233240,14547884,2128332,174888,7432,145,1");

}  // namespace

TEST_CASE("polynomial basics") {
  IntPolynomial z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(IntPolynomial({1, 0, 0}).degree() == 0);
  IntPolynomial f({1, 2});
  IntPolynomial g({3, 0, 1});
  CHECK((f + g) == IntPolynomial({4, 2, 1}));
  CHECK((f * g) == IntPolynomial({3, 6, 1, 2}));
  CHECK((f - f).is_zero());
  CHECK(f(Int(10)) == 21);
  CHECK(f.to_string() == "[1, 2]");
}

TEST_CASE("parsing coefficient lists") {
  CHECK(IntPolynomial::parse("1, 6, 1") == IntPolynomial({1, 6, 1}));
  CHECK(IntPolynomial::parse("1 6 1") == IntPolynomial({1, 6, 1}));
  CHECK(IntPolynomial::parse("-2,0,3") == IntPolynomial({-2, 0, 3}));
  CHECK(IntPolynomial::parse("340282366920938463463374607431768211456").coeff(0) ==
        int_pow(2, 128));
  CHECK_THROWS_AS(IntPolynomial::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(IntPolynomial::parse("1,a"), std::invalid_argument);
  CHECK_THROWS_AS(IntPolynomial::parse("1.5"), std::invalid_argument);
}

TEST_CASE("palindromic test") {
  CHECK(is_palindromic(IntPolynomial({1, 6, 1}), 2));
  CHECK_FALSE(is_palindromic(IntPolynomial({1, 2}), 1));
  CHECK(is_palindromic(IntPolynomial({1, 11, 11, 1}), 3));
  CHECK(is_palindromic(IntPolynomial({1}), 0));
  // padding matters: x+1 is not palindromic for d=2 but is for d=1
  CHECK_FALSE(is_palindromic(IntPolynomial({1, 1}), 2));
  CHECK_THROWS_AS(is_palindromic(IntPolynomial({1, 2, 3}), 1), std::invalid_argument);
}

TEST_CASE("unimodal and log-concave") {
  CHECK(is_unimodal(IntPolynomial({1, 6, 1})));
  CHECK(is_log_concave(IntPolynomial({1, 6, 1})));
  CHECK(is_unimodal(IntPolynomial({1, 1, 2, 1})));
  CHECK_FALSE(is_log_concave(IntPolynomial({1, 1, 2, 1})));
  CHECK_FALSE(is_unimodal(IntPolynomial({2, 1, 2})));
  CHECK(is_log_concave(kH));
  CHECK(is_unimodal(kH));
}

TEST_CASE("gamma extraction") {
  GammaVector g = gamma_extract(IntPolynomial({1, 6, 1}), 2);
  CHECK(g.gammas == std::vector<Int>{1, 4});
  CHECK(g.degree_context == 2);
  CHECK(g.nonnegative());

  for (int d = 1; d <= 6; ++d) {
    CHECK(gamma_extract(one_plus_x_power(d), d).gammas[0] == 1);
    for (size_t i = 1; i < gamma_extract(one_plus_x_power(d), d).gammas.size(); ++i) {
      CHECK(gamma_extract(one_plus_x_power(d), d).gammas[i] == 0);
    }
  }

  GammaVector gex = gamma_extract(kH, 17);
  CHECK(gex.gammas == std::vector<Int>{1, 128, 5376, 90880, 648704, 1992704, 2695168,
                                       1409024, 196608});
  // gamma_k = 4^k * W_k for the printed pair
  for (int k = 0; k <= kW.degree(); ++k) {
    CHECK(gex.gammas[k] == kW.coeff(k) * int_pow(4, k));
  }

  CHECK_THROWS_AS(gamma_extract(IntPolynomial({1, 2}), 1), std::invalid_argument);
}

TEST_CASE("gamma substitution") {
  CHECK(gamma_substitute(IntPolynomial({1}), 3) == IntPolynomial({1, 3, 3, 1}));
  CHECK(gamma_substitute(IntPolynomial({1, 1}), 2) == IntPolynomial({1, 6, 1}));
  CHECK(gamma_substitute(kW, 17) == kH);
  CHECK_THROWS_AS(gamma_substitute(IntPolynomial({1, 1, 1}), 3), std::invalid_argument);
}

TEST_CASE("gamma substitution output is palindromic and satisfies the eval identity") {
  const std::vector<IntPolynomial> gs = {
      IntPolynomial({1}), IntPolynomial({1, 4}), IntPolynomial({2, 0, 5}),
      IntPolynomial({1, 3, 3, 7})};
  for (const auto& g : gs) {
    for (int d = 2 * g.degree(); d <= 2 * g.degree() + 3; ++d) {
      IntPolynomial f = gamma_substitute(g, d);
      CHECK(is_palindromic(f, d));
      CHECK(f(Int(1)) == int_pow(2, d) * g(Int(1)));
      GammaVector back = gamma_extract(f, d);
      for (int k = 0; k <= g.degree(); ++k) {
        CHECK(back.gammas[k] == g.coeff(k) * int_pow(4, k));
      }
    }
  }
}

TEST_CASE("gcd, squarefree part and series numerator") {
  IntPolynomial a = IntPolynomial({1, 1}) * IntPolynomial({2, 1});      // (x+1)(x+2)
  IntPolynomial b = IntPolynomial({1, 1}) * IntPolynomial({3, 1});      // (x+1)(x+3)
  CHECK(poly_gcd(a, b) == IntPolynomial({1, 1}));

  IntPolynomial sq = IntPolynomial({1, 1}) * IntPolynomial({1, 1}) * IntPolynomial({5, 1});
  CHECK(squarefree_part(sq) == IntPolynomial({1, 1}) * IntPolynomial({5, 1}));
  CHECK(squarefree_part(IntPolynomial({7})) == IntPolynomial({1}));

  // L-values of the 2-dimensional diamond: 1, 5, 13 -> numerator (1, 2, 1)
  CHECK(series_numerator({Int(1), Int(5), Int(13)}, 2) == IntPolynomial({1, 2, 1}));
}
