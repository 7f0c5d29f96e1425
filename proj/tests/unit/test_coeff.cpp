#include "helpers.hpp"
#include "support/fuzz.hpp"

using namespace gfree;
using namespace gfree::testing;

namespace {

const CoeffDomain Z = CoeffDomain::integers();

RingElem qx(std::vector<mpq_class> c) { return CoeffDomain::poly_over_rationals("x").from_coeffs(c); }
RingElem f2(std::vector<mpq_class> c) { return CoeffDomain::poly_over_prime_field(2).from_coeffs(c); }

std::vector<CoeffDomain> all_domains() {
  return {Z, CoeffDomain::rationals(), CoeffDomain::prime_field(5), CoeffDomain::poly_over_prime_field(2),
          CoeffDomain::poly_over_prime_field(3), CoeffDomain::poly_over_rationals()};
}

}  // namespace

TEST_SUITE("coeff") {
  TEST_CASE("ext_gcd examples") {
    auto e = Z.ext_gcd(zz(2), zz(3));
    CHECK(Z.equal(e.g, zz(1)));
    CHECK(Z.equal(e.u, zz(-1)));
    CHECK(Z.equal(e.v, zz(1)));

    const auto QX = CoeffDomain::poly_over_rationals("x");
    auto p = QX.ext_gcd(qx({1, 1}), qx({-1, 0, 1}));
    CHECK(QX.equal(p.g, qx({1, 1})));
    CHECK(QX.equal(p.u, QX.one()));
    CHECK(QX.is_zero(p.v));

    auto z = Z.ext_gcd(zz(0), zz(5));
    CHECK(Z.equal(z.g, zz(5)));
    CHECK(Z.is_zero(z.u));
    CHECK(Z.equal(z.v, zz(1)));
  }

  TEST_CASE("lcm examples") {
    CHECK(Z.equal(Z.lcm(zz(4), zz(6)), zz(12)));
    const auto F2 = CoeffDomain::poly_over_prime_field(2);
    CHECK(F2.equal(F2.lcm(f2({0, 1}), f2({1, 1})), f2({0, 1, 1})));
    CHECK(Z.equal(Z.lcm(zz(-7), zz(1)), zz(7)));
    const auto Q = CoeffDomain::rationals();
    CHECK(Q.is_one(Q.lcm(Q.from_int(-7), Q.one())));
  }

  TEST_CASE("strip_witness examples") {
    CHECK(Z.equal(Z.core(zz(12), zz(3)), zz(4)));
    CHECK(Z.equal(Z.core(zz(8), zz(6)), zz(1)));
    const auto F2 = CoeffDomain::poly_over_prime_field(2);
    CHECK(F2.equal(F2.core(f2({0, 1, 1}), f2({0, 1})), f2({1, 1})));
  }

  TEST_CASE("Bezout identity and gcd * lcm on random pairs") {
    Rng rng(11);
    for (const auto& A : all_domains()) {
      CAPTURE(A.name());
      for (int k = 0; k < 300; ++k) {
        RingElem x = random_coeff(A, rng, 40), y = random_coeff(A, rng, 40);
        auto e = A.ext_gcd(x, y);
        CHECK(A.equal(e.g, A.add(A.mul(e.u, x), A.mul(e.v, y))));
        CHECK(A.divides(e.g, x));
        CHECK(A.divides(e.g, y));
        CHECK(A.associate(A.mul(A.lcm(x, y), A.gcd(x, y)), A.mul(x, y)));
        auto [q, r] = A.div_rem(x, y);
        CHECK(A.equal(x, A.add(A.mul(q, y), r)));
      }
    }
  }

  TEST_CASE("strip_witness splits off exactly the a-part") {
    Rng rng(12);
    for (const auto& A : all_domains()) {
      if (A.is_field()) continue;
      CAPTURE(A.name());
      for (int k = 0; k < 200; ++k) {
        RingElem a = random_coeff(A, rng, 12), x = random_coeff(A, rng, 12);
        RingElem x2 = A.mul(x, A.pow(a, 3));
        auto s = A.strip_witness(x2, a);
        CHECK(A.is_unit(A.gcd(s.core, a)));
        RingElem d = A.div_exact(x2, s.core);
        // d divides a power of a
        CHECK(A.divides(d, A.pow(a, 24)));
      }
    }
  }

  TEST_CASE("localization agrees with fractions") {
    const RingElem a = zz(6);
    Localization L(Z, a);
    Rng rng(13);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<unsigned> pw(0, 3);
    auto value = [](const LocalizedElem& e) {
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 6, e.apower);
      mpq_class q(std::get<mpz_class>(e.numerator.payload()), den);
      q.canonicalize();
      return q;
    };
    for (int k = 0; k < 500; ++k) {
      long n1 = num(rng), n2 = num(rng);
      auto x = L.make(zz(n1), pw(rng)), y = L.make(zz(n2), pw(rng));
      mpq_class vx = value(x), vy = value(y);
      CHECK(value(L.add(x, y)) == vx + vy);
      CHECK(value(L.mul(x, y)) == vx * vy);
      CHECK(L.equal(x, y) == (vx == vy));
      // units of ZZ[1/6] are +-2^i 3^j
      mpz_class nz = abs(vx.get_num());
      while (nz != 0 && nz % 2 == 0) nz /= 2;
      while (nz != 0 && nz % 3 == 0) nz /= 3;
      CHECK(L.is_unit(x) == (nz == 1));
    }
    CHECK(L.divides(L.make(zz(5)), L.make(zz(4))) == false);
    CHECK(L.divides(L.make(zz(4)), L.make(zz(3))));
  }

  TEST_CASE("normalization") {
    CHECK(Z.equal(Z.normalize(zz(-8)), zz(8)));
    const auto F5 = CoeffDomain::prime_field(5);
    CHECK(F5.is_one(F5.normalize(F5.from_int(3))));
    const auto Q = CoeffDomain::poly_over_rationals();
    RingElem p = Q.from_coeffs({1, 2});
    CHECK(Q.equal(Q.normalize(p), Q.from_coeffs({mpq_class(1, 2), 1})));
  }

  TEST_CASE("frobenius on coefficients") {
    const auto F2 = CoeffDomain::poly_over_prime_field(2);
    CHECK(F2.equal(F2.frobenius(f2({1, 1}), 2), f2({1, 0, 1})));
    CHECK_THROWS_AS(Z.frobenius(zz(3), 2), DomainError);
  }

  TEST_CASE("rendering") {
    CHECK(Z.to_string(zz(-3)) == "-3");
    CHECK(CoeffDomain::poly_over_prime_field(2).to_string(f2({1, 0, 1})) == "{t^2 + 1}");
    CHECK(CoeffDomain::poly_over_prime_field(7).name() == "GF(7)[t]");
  }
}
