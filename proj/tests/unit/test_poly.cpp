#include "helpers.hpp"
#include "support/fuzz.hpp"

#include <map>

using namespace gfree;
using namespace gfree::testing;

namespace {

FreeModule space(std::size_t nvars, OrderSpec o, std::size_t rank = 1,
                 CoeffDomain A = CoeffDomain::integers()) {
  FreeModule F;
  F.domain = A;
  for (std::size_t i = 0; i < nvars; ++i) F.vars.push_back(std::string(1, static_cast<char>('x' + i)));
  F.order = std::move(o);
  F.rank = rank;
  return F;
}

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

using Naive = std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, RingElem>;

Naive naive(const FreeModule& F, const FreeElem& w) {
  Naive m;
  for (const auto& t : w.terms) {
    auto key = std::make_pair(t.basis, t.mono.exps);
    auto it = m.find(key);
    if (it == m.end()) m.emplace(key, t.coeff);
    else it->second = F.domain.add(it->second, t.coeff);
  }
  std::erase_if(m, [&](const auto& kv) { return F.domain.is_zero(kv.second); });
  return m;
}

bool same(const FreeModule& F, const Naive& a, const Naive& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || !F.domain.equal(v, it->second)) return false;
  }
  return true;
}

bool sorted_strictly(const FreeModule& F, const FreeElem& w) {
  for (std::size_t i = 1; i < w.terms.size(); ++i)
    if (F.order.compare(w.terms[i - 1], w.terms[i]) <= 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("monomial order examples") {
    auto lex = OrderSpec::lex(2);
    CHECK(lex.compare_monomials(mono({2, 1}), mono({1, 2})) > 0);

    // position over term: x e2 < x^5 e1
    CHECK(lex.compare(mono({1, 0}), 1, mono({5, 0}), 0) < 0);

    auto grevlex = OrderSpec::grevlex(3);
    CHECK(grevlex.compare_monomials(mono({1, 0, 1}), mono({0, 2, 0})) < 0);
  }

  TEST_CASE("variable ranking and weights") {
    auto o = OrderSpec::lex(2);
    o.perm = {1, 0};
    CHECK(o.compare_monomials(mono({1, 0}), mono({0, 1})) < 0);
    auto w = OrderSpec::lex(2);
    w.weights = std::vector<std::int64_t>{1, 3};
    CHECK(w.compare_monomials(mono({2, 0}), mono({0, 1})) < 0);
    CHECK_THROWS_AS(o.validate(3), std::invalid_argument);
  }

  TEST_CASE("leading term examples") {
    auto P = problem("ring ZZ\nvars x y\norder lex\nmodule 2\ngens:\nx*e1\n");
    auto lt = leading_term(P.space, elem(P, "y*e2 + 2*x*e2"));
    CHECK(to_string(P.space, lt) == "2*x*e2");
    auto lt2 = leading_term(P.space, elem(P, "3*y*e1 + x^9*e2"));
    CHECK(to_string(P.space, lt2) == "3*y*e1");

    auto R = P.space.ring();
    FreeElem f = elem(problem("ring ZZ\nvars x y\norder lex\ngens:\nx\n"), "2*x");
    FreeElem w = elem(P, "3*y*e1");
    CHECK(to_string(P.space, leading_term(P.space, mul_poly(P.space, f, w))) == "6*x*y*e1");
    CHECK_THROWS_AS(leading_term(P.space, FreeElem{}), std::invalid_argument);
  }

  TEST_CASE("graded degree examples") {
    Grading g{{1, 1}, {0}};
    CHECK(graded_degree(Term{zz(1), mono({2, 1}), 0}, g) == 3);
    Grading h{{2, 1}, {5}};
    CHECK(graded_degree(Term{zz(1), mono({1, 0}), 0}, h) == 7);
    CHECK(graded_degree(Term{zz(4), mono({0, 0}), 0}, g) == 0);
  }

  TEST_CASE("orders are multiplicative") {
    Rng rng(21);
    for (int k = 0; k < 2000; ++k) {
      std::size_t n = 1 + k % 4;
      OrderSpec o = random_order(n, rng);
      if (k % 3 == 0) {
        std::vector<std::int64_t> w(n);
        for (auto& x : w) x = 1 + static_cast<std::int64_t>(rng() % 4);
        o.weights = w;
      }
      Monomial a = random_monomial_upto(n, 4, rng), b = random_monomial_upto(n, 4, rng);
      Monomial m = random_monomial_upto(n, 3, rng);
      if (a == b) continue;
      if (o.compare_monomials(a, b) < 0) std::swap(a, b);
      CHECK(o.compare_monomials(mono_mul(m, a), mono_mul(m, b)) > 0);
      if (!m.is_one()) CHECK(o.compare_monomials(mono_mul(m, a), a) > 0);
    }
  }

  TEST_CASE("leading term of a product") {
    Rng rng(22);
    for (const auto& A : fuzz_domains()) {
      for (int k = 0; k < 300; ++k) {
        std::size_t n = 1 + k % 3;
        FreeModule F = space(n, random_order(n, rng), 1 + k % 2, A);
        FreeElem f = random_elem(F.ring(), rng, 3, 3, 5);
        FreeElem w = random_elem(F, rng, 3, 3, 5);
        Term lf = leading_term(F.ring(), f), lw = leading_term(F, w);
        Term lp = leading_term(F, mul_poly(F, f, w));
        Term expect = term_mul(F, lf, lw);
        CHECK(lp.mono == expect.mono);
        CHECK(lp.basis == expect.basis);
        CHECK(A.equal(lp.coeff, expect.coeff));
      }
    }
  }

  TEST_CASE("FreeElem arithmetic matches a naive map") {
    Rng rng(23);
    for (int k = 0; k < 1000; ++k) {
      const auto doms = fuzz_domains();
      const auto& A = doms[static_cast<std::size_t>(k) % doms.size()];
      std::size_t n = 1 + k % 3;
      FreeModule F = space(n, random_order(n, rng), 1 + k % 2, A);
      FreeElem a = random_elem(F, rng, 4, 3, 4), b = random_elem(F, rng, 4, 3, 4);
      RingElem c = random_coeff(A, rng, 4);
      Monomial m = random_monomial_upto(n, 2, rng);

      FreeElem s = add(F, a, b);
      CHECK(sorted_strictly(F, s));
      Naive ns = naive(F, a);
      for (const auto& [key, v] : naive(F, b)) {
        auto it = ns.find(key);
        if (it == ns.end()) ns.emplace(key, v);
        else it->second = A.add(it->second, v);
      }
      std::erase_if(ns, [&](const auto& kv) { return A.is_zero(kv.second); });
      CHECK(same(F, naive(F, s), ns));

      FreeElem p = mul_term(F, a, c, m);
      CHECK(sorted_strictly(F, p));
      Naive np;
      for (const auto& t : a.terms) np.emplace(std::make_pair(t.basis, mono_mul(m, t.mono).exps), A.mul(c, t.coeff));
      CHECK(same(F, naive(F, p), np));

      FreeElem d = sub_mul_term(F, a, c, m, b);
      CHECK(equal(F, d, sub(F, a, mul_term(F, b, c, m))));
      CHECK(sub(F, a, a).is_zero());
    }
  }

  TEST_CASE("make_elem combines and sorts") {
    auto P = problem("ring ZZ\nvars x y\norder grevlex\ngens:\nx\n");
    FreeElem w = elem(P, "y + x - y + 2*x^2");
    CHECK(str(P.space, w) == "2*x^2 + x");
    CHECK(str(P.space, unit_normalize(P.space, elem(P, "-3*x + y"))) == "3*x - y");
  }

  TEST_CASE("exponent overflow is detected") {
    Monomial big(std::vector<std::uint32_t>{0xFFFFFFF0u});
    CHECK_THROWS(mono_mul(big, big));
  }
}
