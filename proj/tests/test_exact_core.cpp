#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsym/multipoly.hpp"
#include "nsym/random_gen.hpp"
#include "nsym/trigpoly.hpp"

using namespace nsym;

TEST_CASE("rational reduction and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK((Rational(5) / Rational(10)).to_string() == "1/2");
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("gaussian rational field operations") {
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(Rational(-1)));
  GaussianRational z(Rational(3, 2), Rational(-5));
  CHECK(z * (GaussianRational(1) / z) == GaussianRational(1));
  CHECK(z.conj().conj() == z);

  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    GaussianRational a = rng.gaussian(), b = rng.gaussian();
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
}

TEST_CASE("hbar polynomials") {
  HPoly h = HPoly::hbar();
  CHECK(h * h == HPoly::hbar(2));
  HPoly p = HPoly(2) + HPoly::hbar(1, GaussianRational(Rational(0), Rational(-1)));
  CHECK(p.coeff(1) == GaussianRational(Rational(0), Rational(-1)));
  CHECK((p - p).is_zero());
  CHECK(p.to_string() == "2 + -i*hbar");
}

static VarsPtr qq() { return make_vars({"q1", "q2", "p"}); }

TEST_CASE("multipoly examples") {
  VarsPtr v = qq();
  MultiPoly q1 = MultiPoly::var(v, 0), q2 = MultiPoly::var(v, 1), p = MultiPoly::var(v, 2);

  CHECK(q1 * q1 == MultiPoly::var(v, 0, 2));
  CHECK((p + (-p)).is_zero());
  CHECK((q1 + q2) * (q1 - q2) == q1 * q1 - q2 * q2);

  // partial derivatives
  CHECK((q1 * q1).diff(0) == q1.scaled(HPoly(2)));
  CHECK(q1.diff(1).is_zero());
  CHECK((q1 * q2 + q1 * q1 * q1).diff(0) == q2 + (q1 * q1).scaled(HPoly(3)));

  VarsPtr other = make_vars({"x"});
  CHECK_THROWS_AS(q1 + MultiPoly::var(other, 0), StructuralError);
  CHECK_THROWS_AS(q1.diff(5), StructuralError);
}

TEST_CASE("multipoly ring axioms on random triples") {
  VarsPtr v = qq();
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    MultiPoly a = rng.multipoly(v, 3, 3);
    MultiPoly b = rng.multipoly(v, 3, 3);
    MultiPoly c = rng.multipoly(v, 3, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("trig polynomials") {
  TrigPoly e1 = TrigPoly::mode(1);
  CHECK(e1.diff() == TrigPoly::mode(1, HPoly::i()));
  CHECK(TrigPoly(HPoly(1)).diff().is_zero());
  CHECK(TrigPoly::cos().diff() == -TrigPoly::sin());
  CHECK(TrigPoly::sin().diff() == TrigPoly::cos());
  CHECK(TrigPoly::cos().is_real());
  CHECK(TrigPoly::sin().is_real());
  CHECK_FALSE(TrigPoly::mode(2).is_real());
  // cos^2 + sin^2 = 1
  CHECK(TrigPoly::cos() * TrigPoly::cos() + TrigPoly::sin() * TrigPoly::sin() ==
        TrigPoly(HPoly(1)));

  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    TrigPoly a = rng.real_trig(3), b = rng.real_trig(3);
    CHECK((a * b).diff() == a.diff() * b + a * b.diff());
    CHECK((a * b).is_real());
  }
}

TEST_CASE("bitrig rotation identities") {
  // cos(phi+alpha) = cos phi cos alpha - sin phi sin alpha
  CHECK(BiTrig::cos_sum() ==
        BiTrig::cos_phi() * BiTrig::cos_alpha() - BiTrig::sin_phi() * BiTrig::sin_alpha());
  CHECK(BiTrig::sin_sum() ==
        BiTrig::sin_phi() * BiTrig::cos_alpha() + BiTrig::cos_phi() * BiTrig::sin_alpha());
}
