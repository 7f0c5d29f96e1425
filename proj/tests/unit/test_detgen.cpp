#include "helpers.hpp"

using namespace gfree;
using namespace gfree::testing;

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

std::vector<std::vector<RingElem>> ones(const CoeffDomain& A, std::size_t m, std::size_t n) {
  return std::vector<std::vector<RingElem>>(m, std::vector<RingElem>(n, A.one()));
}

}  // namespace

TEST_SUITE("detgen") {
  TEST_CASE("exempt set examples") {
    CHECK(antidiagonal_complement(2, 3, 2) == Pairs{{2, 3}});
    CHECK(antidiagonal_complement(3, 3, 3) == Pairs{{1, 1}, {2, 3}, {3, 2}, {3, 3}});
    CHECK(antidiagonal_complement(1, 1, 1).empty());
    CHECK(antidiagonal_complement(2, 3, 2, true) == Pairs{{1, 1}, {2, 3}});
  }

  TEST_CASE("instance examples") {
    const auto Q = CoeffDomain::rationals();
    auto i22 = unit_instance(Q, 2, 2, 2);
    auto m22 = build_minors(i22);
    REQUIRE(m22.size() == 1);
    CHECK(str(i22.space, m22[0]) == "-x1_2*x2_1 + x1_1*x2_2");
    CHECK(to_string(i22.space, m22[0].lead()) == "-x1_2*x2_1");

    auto i23 = unit_instance(Q, 2, 3, 2);
    auto m23 = build_minors(i23);
    REQUIRE(m23.size() == 3);
    std::vector<std::string> leads;
    for (const auto& g : m23) leads.push_back(to_string(i23.space, Term{Q.one(), g.lead().mono, 0}));
    CHECK(leads == std::vector<std::string>{"x1_2*x2_1", "x1_3*x2_1", "x1_3*x2_2"});

    const auto Z = CoeffDomain::integers();
    auto c = ones(Z, 2, 2);
    c[0][1] = zz(2);
    c[1][0] = zz(3);
    auto i6 = make_instance(Z, 2, 2, 2, c);
    auto m6 = build_minors(i6);
    CHECK(str(i6.space, m6[0]) == "-6*x1_2*x2_1 + x1_1*x2_2");

    auto zero = ones(Z, 2, 2);
    zero[1][1] = Z.zero();
    CHECK_THROWS_AS(make_instance(Z, 2, 2, 2, zero), std::invalid_argument);
    CHECK_THROWS_AS(unit_instance(Z, 3, 2, 2), std::invalid_argument);
  }

  TEST_CASE("minor counts and antidiagonal leads") {
    const auto Q = CoeffDomain::rationals();
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t n = m; n <= 4; ++n)
        for (std::size_t t = 1; t <= m; ++t) {
          auto inst = unit_instance(Q, m, n, t);
          auto ms = build_minors(inst);
          auto choose = [](std::size_t a, std::size_t b) {
            std::size_t r = 1;
            for (std::size_t i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
            return r;
          };
          CHECK(ms.size() == choose(m, t) * choose(n, t));
          CHECK(build_minors(inst, Exec::Parallel).size() == ms.size());
        }
  }

  TEST_CASE("witness examples") {
    const auto Z = CoeffDomain::integers();
    auto c = ones(Z, 2, 3);
    c[1][2] = zz(7);
    CHECK(Z.is_one(det_witness(make_instance(Z, 2, 3, 2, c)).value));
    auto d = ones(Z, 2, 3);
    d[0][0] = zz(6);
    CHECK(Z.equal(det_witness(make_instance(Z, 2, 3, 2, d)).value, zz(6)));
    CHECK(Z.is_one(det_witness(unit_instance(Z, 3, 3, 2)).value));
  }

  TEST_CASE("witness divides the lcm of all coefficients") {
    const auto Z = CoeffDomain::integers();
    const long vals[] = {1, 2, 3, 5, 6, 7, 10};
    for (int k = 0; k < 50; ++k) {
      auto c = ones(Z, 3, 3);
      RingElem all = Z.one();
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          c[i][j] = zz(vals[(k * 7 + static_cast<int>(i * 3 + j) * 5) % 7]);
          all = Z.lcm(all, c[i][j]);
        }
      for (std::size_t t = 1; t <= 3; ++t) CHECK(Z.divides(det_witness(make_instance(Z, 3, 3, t, c)).value, all));
    }
  }

  TEST_CASE("verify examples") {
    const auto Q = CoeffDomain::rationals(), Z = CoeffDomain::integers();
    auto i23 = unit_instance(Q, 2, 3, 2);
    auto r = verify_instance(i23, build_minors(i23), 3);
    CHECK(r.pass);
    CHECK(r.additions == 0);
    CHECK(r.generic.ranks == std::vector<std::int64_t>{1, 6, 18, 40});

    auto c = ones(Z, 2, 3);
    c[0][0] = zz(2);
    auto i2 = make_instance(Z, 2, 3, 2, c);
    auto r2 = verify_instance(i2, build_minors(i2), 3, {Point{3}, Point{5}, Point{7}});
    CHECK(r2.pass);
    CHECK(Z.equal(r2.witness.value, zz(2)));
    for (const auto& f : r2.fibers) CHECK(f.table.ranks == r2.generic.ranks);

    auto i33 = unit_instance(Q, 3, 3, 2);
    auto m33 = build_minors(i33);
    CHECK(m33.size() == 9);
    auto r3 = verify_instance(i33, m33, 3, {}, Exec::Parallel);
    CHECK(r3.pass);
    CHECK(r3.certified);
    CHECK(r3.sqfree.squarefree);
  }

  TEST_CASE("coefficients over a polynomial ring") {
    const auto A = CoeffDomain::poly_over_prime_field(3);
    auto c = ones(A, 2, 3);
    c[0][1] = A.gen();
    auto inst = make_instance(A, 2, 3, 2, c);
    auto r = verify_instance(inst, build_minors(inst), 3);
    CHECK(A.equal(r.witness.value, A.gen()));
    CHECK(r.pass);
    REQUIRE_FALSE(r.fibers.empty());
    CHECK(r.fibers.front().point.value == 1);
  }
}
