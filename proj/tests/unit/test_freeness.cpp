#include "helpers.hpp"
#include "support/fuzz.hpp"

using namespace gfree;
using namespace gfree::testing;

namespace {

std::vector<std::string> names(const FreeModule& F, const std::vector<StandardMonomial>& s) {
  std::vector<std::string> out;
  for (const auto& m : s) out.push_back(to_string(F, Term{F.domain.one(), m.mono, m.basis}));
  return out;
}

std::vector<Term> lead_terms(const std::vector<FreeElem>& ws) {
  std::vector<Term> out;
  for (const auto& w : ws) out.push_back(w.lead());
  return out;
}

}  // namespace

TEST_SUITE("freeness") {
  TEST_CASE("witness examples") {
    auto P = problem("ring ZZ\nvars x y\norder lex\ngens:\n2*x + y\n3*x\n");
    auto G = buchberger(P.space, P.gens);
    CHECK(P.space.domain.equal(witness(G).value, zz(3)));

    auto Q = problem("ring QQ\nvars x y\norder lex\ngens:\n2*x + y\n3*x\n");
    CHECK(Q.space.domain.is_one(witness(buchberger(Q.space, Q.gens)).value));

    std::vector<std::vector<RingElem>> c{{zz(2), zz(5), zz(1)}, {zz(3), zz(1), zz(1)}};
    auto inst = make_instance(CoeffDomain::integers(), 2, 3, 2, c);
    auto D = certify(inst.space, build_minors(inst));
    // antidiagonal products 5*3, 1*3, 1*1
    CHECK(inst.space.domain.equal(witness(D).value, zz(15)));
  }

  TEST_CASE("refined witness only shrinks") {
    auto P = problem("ring ZZ\nvars x y\norder lex\ngens:\n2*x\n3*x\n");
    GroebnerBasis G = certify(P.space, P.gens);
    REQUIRE(G.certified);
    CHECK(P.space.domain.equal(witness(G).value, zz(6)));
    CHECK(P.space.domain.is_one(witness(G, true).value));
  }

  TEST_CASE("standard monomial examples") {
    auto P = problem("ring ZZ\nvars x y\norder lex\ngens:\nx - y\n3*y\n");
    auto G = certify(P.space, P.gens);
    auto s = standard_monomials(P.space, G.initial_terms, witness(G), 4, P.grading);
    CHECK(names(P.space, s) == std::vector<std::string>{"1"});

    auto Q = problem("ring QQ\nvars x y\norder lex\ngens:\nx^2\nx*y\n");
    Witness one{Q.space.domain.one(), {}};
    auto s2 = standard_monomials(Q.space, lead_terms(Q.gens), one, 2, Q.grading);
    CHECK(names(Q.space, s2) == std::vector<std::string>{"1", "x", "y", "y^2"});

    auto s3 = standard_monomials(Q.space, {}, one, 2, Q.grading);
    CHECK(s3.size() == 6);

    // 3 is not a unit after inverting 2
    Witness two{zz(2), {}};
    CHECK_THROWS_AS(standard_monomials(P.space, G.initial_terms, two, 2, P.grading), DomainError);
  }

  TEST_CASE("hilbert function examples") {
    // antidiagonal leads of the 2-minors of a generic 2 x 3 matrix
    auto inst = unit_instance(CoeffDomain::rationals(), 2, 3, 2);
    auto h = hilbert_function(inst.space, lead_terms(build_minors(inst)), Grading::standard(6), 0, 3);
    CHECK(h.ranks == std::vector<std::int64_t>{1, 6, 18, 40});

    auto P = problem("ring ZZ\nvars x\ngens:\nx\n");
    auto hx = hilbert_function(P.space, lead_terms(P.gens), P.grading, 0, 3);
    CHECK(hx.ranks == std::vector<std::int64_t>{1, 0, 0, 0});
    auto h1 = hilbert_function(P.space, {}, P.grading, 0, 3);
    CHECK(h1.ranks == std::vector<std::int64_t>{1, 1, 1, 1});
  }

  TEST_CASE("hilbert numerator and brute force agree") {
    Rng rng(41);
    for (int k = 0; k < 300; ++k) {
      auto in = random_instance(CoeffDomain::rationals(), rng);
      if (k % 2) {
        for (auto& w : in.grading.var_weights) w = 1 + static_cast<std::int64_t>(rng() % 3);
        for (auto& d : in.grading.basis_shifts) d = static_cast<std::int64_t>(rng() % 3);
      }
      auto leads = lead_terms(in.gens);
      auto fast = hilbert_function(in.space, leads, in.grading, 0, 6);
      auto slow = hilbert_function_bruteforce(in.space, leads, in.grading, 0, 6);
      CHECK(fast.ranks == slow.ranks);
    }
    // (x^2, xy) with weights 1: 1 - 2t^2 + t^3
    auto num = hilbert_numerator({Monomial({2, 0}), Monomial({1, 1})}, {1, 1});
    CHECK(num == std::vector<std::int64_t>{1, 0, -2, 1});
  }

  TEST_CASE("standard monomials are exactly the complement") {
    Rng rng(42);
    for (int k = 0; k < 200; ++k) {
      auto in = random_instance(CoeffDomain::prime_field(5), rng);
      auto G = buchberger(in.space, in.gens);
      auto s = standard_monomials(in.space, G.initial_terms, witness(G), 4, in.grading);
      auto brute = hilbert_function_bruteforce(in.space, G.initial_terms, in.grading, 0, 4);
      std::int64_t total = 0;
      for (auto r : brute.ranks) total += r;
      CHECK(static_cast<std::int64_t>(s.size()) == total);
      for (const auto& m : s) {
        CHECK(m.degree <= 4);
        for (const auto& t : G.initial_terms)
          CHECK_FALSE((t.basis == m.basis && mono_divides(t.mono, m.mono)));
      }
    }
  }

  TEST_CASE("specialization examples") {
    auto P = problem("ring ZZ\nvars x y\norder lex\ngens:\n2*x + y\n3*x\n");
    auto s5 = specialize(P.space, P.gens, Point{5});
    CHECK(s5.space.domain.name() == "GF(5)");
    REQUIRE(s5.gens.size() == 2);
    CHECK(str(s5.space, s5.gens[0]) == "2*x + y");
    CHECK(str(s5.space, s5.gens[1]) == "3*x");
    auto s2 = specialize(P.space, {P.gens[0]}, Point{2});
    REQUIRE(s2.gens.size() == 1);
    CHECK(str(s2.space, s2.gens[0]) == "y");
    auto s3 = specialize(P.space, P.gens, Point{3});
    CHECK(s3.vanished == std::vector<std::size_t>{1});

    auto Q = problem("ring QQ[t]\nvars x y\norder lex\ngens:\n{t}*x + y^2\n");
    auto q1 = specialize(Q.space, Q.gens, Point{1});
    CHECK(q1.space.domain.name() == "QQ");
    CHECK(str(q1.space, q1.gens[0]) == "x + y^2");
    CHECK_THROWS(specialize(P.space, P.gens, Point{4}));
  }

  TEST_CASE("default points avoid the witness") {
    const auto Z = CoeffDomain::integers();
    auto pts = default_points(Z, zz(6));
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].value == 5);
    CHECK(pts[2].value == 11);
    const auto F2 = CoeffDomain::poly_over_prime_field(2);
    CHECK(default_points(F2, F2.from_coeffs({0, 1, 1})).empty());
    auto p3 = default_points(CoeffDomain::poly_over_rationals(), CoeffDomain::poly_over_rationals().gen());
    CHECK(p3.front().value == 1);
  }

  TEST_CASE("fiber examples") {
    auto inst = unit_instance(CoeffDomain::integers(), 2, 3, 2);
    auto minors = build_minors(inst);
    auto fr = fiber_compare(inst.space, minors, {Point{5}, Point{7}, Point{11}}, 0, 3, Grading::standard(6));
    CHECK(fr.consistent);
    CHECK(fr.generic.ranks == std::vector<std::int64_t>{1, 6, 18, 40});
    for (const auto& f : fr.fibers) CHECK(f.table.ranks == fr.generic.ranks);

    auto P = problem("ring ZZ\nvars x\ngens:\n3*x\n");
    auto r = fiber_compare(P.space, P.gens, {Point{3}, Point{5}}, 0, 2, P.grading);
    REQUIRE(r.fibers.size() == 2);
    CHECK(r.fibers[0].kills_witness);
    CHECK_FALSE(r.fibers[0].equal);
    CHECK(r.fibers[0].differing_degrees == std::vector<std::int64_t>{1, 2});
    CHECK(r.fibers[0].table.at(1) == 1);
    CHECK(r.fibers[1].table.at(1) == 0);
    CHECK(r.consistent);

    auto e = fiber_compare(P.space, {}, {Point{3}, Point{5}}, 0, 2, P.grading);
    for (const auto& f : e.fibers) CHECK(f.table.ranks == std::vector<std::int64_t>{1, 1, 1});

    auto N = problem("ring ZZ\nvars x y\norder lex\ngens:\nx + 1\n");
    CHECK_THROWS_AS(fiber_compare(N.space, N.gens, {Point{5}}, 0, 2, N.grading), std::invalid_argument);
  }

  TEST_CASE("primes avoiding the witness reproduce the generic table") {
    Rng rng(43);
    FuzzParams p;
    p.homogeneous = true;
    p.max_gens = 3;
    std::size_t checked = 0;
    for (int k = 0; k < 60; ++k) {
      auto in = random_instance(CoeffDomain::integers(), rng, p);
      auto pts = default_points(in.space.domain, witness(buchberger(in.space, in.gens)).value, 4);
      for (auto ex : {Exec::Serial, Exec::Parallel}) {
        auto fr = fiber_compare(in.space, in.gens, pts, 0, 4, in.grading, ex);
        CHECK(fr.consistent);
        checked += fr.fibers.size();
      }
    }
    CHECK(checked == 480);
  }
}
