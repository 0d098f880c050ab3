#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ckgeo/conic.hpp"
#include "ckgeo/linalg.hpp"
#include "ckgeo/quadext.hpp"
#include "ckgeo/rational.hpp"
#include "ckgeo/vec3.hpp"

using namespace ck;

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rat::parse("6/4") == Rat(3, 2));
  CHECK(Rat::parse("-1.25") == Rat(-5, 4));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK(Rat(6, -4).str() == "-3/2");
  CHECK(Rat(0).str() == "0");
}

TEST_CASE("rational exact square root") {
  CHECK(*Rat(9, 4).sqrt_exact() == Rat(3, 2));
  CHECK(!Rat(2).sqrt_exact().has_value());
  CHECK(!Rat(-4).sqrt_exact().has_value());
  CHECK(*Rat(7225).sqrt_exact() == Rat(85));
}

TEST_CASE("quadratic extension arithmetic and signs") {
  QExt r2 = QExt::sqrt_of(Rat(2));
  CHECK((r2 * r2) == QExt(Rat(2)));
  QExt x = QExt(Rat(1)) + r2;           // 1 + sqrt2 > 0
  QExt y = QExt(Rat(-3)) + QExt(Rat(2)) * r2;  // 2sqrt2 - 3 < 0
  CHECK(x.sign() == 1);
  CHECK(y.sign() == -1);
  CHECK((x * y).sign() == -1);
  // (1+sqrt2)(1-sqrt2) = -1
  CHECK(x * x.conj() == QExt(Rat(-1)));
  // division round trip
  CHECK((x / y) * y == x);
  // perfect-square radicand folds to a rational
  QExt folded = QExt(Rat(1), Rat(2), Rat(9, 4));  // 1 + 2*(3/2) = 4
  CHECK(folded.is_rational());
  CHECK(folded == QExt(Rat(4)));
}

TEST_CASE("projective equality") {
  V3<Rat> a{Rat(1), Rat(2), Rat(3)}, b{Rat(2), Rat(4), Rat(6)};
  CHECK(projectively_equal(a, b));
  V3<Rat> e1{Rat(1), Rat(0), Rat(0)}, e2{Rat(0), Rat(1), Rat(0)};
  CHECK(!projectively_equal(e1, e2));
  // paper fixture: meet construction vs published diagonal point
  V3<Rat> lhs{Rat(-600), Rat(492), Rat(144)}, rhs{Rat(-50), Rat(41), Rat(12)};
  CHECK(projectively_equal(lhs, rhs));
  CHECK_THROWS_AS(projectively_equal(V3<Rat>{Rat(0), Rat(0), Rat(0)}, rhs), geom_error);
}

TEST_CASE("projective equality float tolerance") {
  V3<double> a{1.0, 2.0, 3.0}, b{2.0, 4.0, 6.0 + 1e-13};
  CHECK(projectively_equal(a, b));
  V3<double> c{1.0, 2.0, 3.001};
  CHECK(!projectively_equal(a, c));
}

TEST_CASE("chi reverse lexicographic sign") {
  CHECK(chi(V3<Rat>{Rat(0), Rat(0), Rat(0)}) == 0);
  CHECK(chi(V3<Rat>{Rat(-3), Rat(0), Rat(4)}) == 1);
  CHECK(chi(V3<Rat>{Rat(5), Rat(-2), Rat(0)}) == -1);
  CHECK(chi(V3<Rat>{Rat(-7), Rat(0), Rat(0)}) == -1);
}

TEST_CASE("solve_linear_3 kernel extraction") {
  using VR = V3<Rat>;
  VR k = solve_linear_3<Rat>({VR{Rat(1), Rat(0), Rat(0)}, VR{Rat(0), Rat(1), Rat(0)}});
  CHECK(projectively_equal(k, VR{Rat(0), Rat(0), Rat(1)}));
  VR k2 = solve_linear_3<Rat>({VR{Rat(1), Rat(1), Rat(0)}, VR{Rat(0), Rat(1), Rat(1)}});
  CHECK(projectively_equal(k2, VR{Rat(1), Rat(-1), Rat(1)}));
  CHECK_THROWS_AS(
      (void)solve_linear_3<Rat>({VR{Rat(1), Rat(0), Rat(0)}, VR{Rat(2), Rat(0), Rat(0)}}),
      geom_error);
  CHECK_THROWS_AS((void)solve_linear_3<Rat>({VR{Rat(1), Rat(0), Rat(0)},
                                             VR{Rat(0), Rat(1), Rat(0)},
                                             VR{Rat(0), Rat(0), Rat(1)}}),
                  geom_error);
}

TEST_CASE("rational scale invariance of kernel extraction") {
  using VR = V3<Rat>;
  Rat lam(7, 3);
  VR r1{Rat(3), Rat(-2), Rat(5)}, r2{Rat(1), Rat(4), Rat(-1)};
  VR k = solve_linear_3<Rat>({r1, r2});
  VR ks = solve_linear_3<Rat>({lam * r1, lam * r2});
  CHECK(projectively_equal(k, ks));
}
