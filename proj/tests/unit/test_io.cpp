#include "helpers.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gfree;
using namespace gfree::testing;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("parse examples") {
    auto P = parse_problem("ring ZZ\nvars x y\norder lex\ngens:\n2*x + y\n3*x");
    CHECK(P.space.domain.name() == "ZZ");
    CHECK(P.space.vars == std::vector<std::string>{"x", "y"});
    CHECK(P.space.order.base == BaseOrder::Lex);
    REQUIRE(P.gens.size() == 2);
    CHECK(str(P.space, P.gens[0]) == "2*x + y");

    auto Q = parse_problem("ring GF(2)[t]\nvars x y\norder lex\ngens:\n{t}*x + y^2");
    REQUIRE(Q.gens.size() == 1);
    CHECK(str(Q.space, Q.gens[0]) == "{t}*x + y^2");

    try {
      parse_problem("ring ZZ\nvars x\ngens:\n0");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
      CHECK(e.column() == 1);
      CHECK(std::string(e.what()).find("zero generator") != std::string::npos);
    }
  }

  TEST_CASE("defaults and stanzas") {
    auto P = parse_problem("ring QQ\nvars a b c\ngens:\na*b - c^2\n");
    CHECK(P.space.order.base == BaseOrder::GrevLex);
    CHECK(P.grading == Grading::standard(3));
    auto M = parse_problem("ring ZZ\nvars x y\norder lex y x\nweights 1 2\ngrading 2 1\nmodule 2 0 1\ngens:\nx*e1 - 3*y*e2\n");
    CHECK(M.space.rank == 2);
    CHECK(M.space.order.perm == std::vector<std::size_t>{1, 0});
    CHECK(M.grading.var_weights == std::vector<std::int64_t>{2, 1});
    CHECK(M.grading.basis_shifts == std::vector<std::int64_t>{0, 1});
  }

  TEST_CASE("diagnostics carry positions") {
    CHECK(error_at("ring ZZ\nvars x\ngens:\nx + y\n") == std::pair<std::size_t, std::size_t>{4, 5});
    CHECK(error_at("ring ZX\nvars x\ngens:\nx\n") == std::pair<std::size_t, std::size_t>{1, 6});
    CHECK(error_at("ring GF(4)\nvars x\ngens:\nx\n") == std::pair<std::size_t, std::size_t>{1, 9});
    CHECK(error_at("ring ZZ\nvars x\ngens:\nx $ 1\n") == std::pair<std::size_t, std::size_t>{4, 3});
    CHECK(error_at("ring ZZ\nvars x\ngens:\n1/2*x\n") == std::pair<std::size_t, std::size_t>{4, 1});
    CHECK(error_at("vars x\nring ZZ\ngens:\nx\n").first == 1);
  }

  TEST_CASE("print then parse is the identity on the corpus") {
    std::size_t n = 0;
    for (const auto& e : std::filesystem::directory_iterator(GFREE_CORPUS)) {
      CAPTURE(e.path().string());
      auto a = parse_problem(slurp(e.path()));
      auto text = print_problem(a);
      auto b = parse_problem(text);
      CHECK(same_problem(a, b));
      CHECK(print_problem(b) == text);
      ++n;
    }
    CHECK(n >= 30);
  }

  TEST_CASE("points, domains and coefficient files") {
    auto pts = parse_points("5,7, 11");
    REQUIRE(pts.size() == 3);
    CHECK(pts[2].value == 11);
    CHECK(parse_points("0,1/2,-3")[1].value == mpq_class(1, 2));
    CHECK(parse_domain("GF(3)[s]").var() == "s");
    CHECK_THROWS_AS(parse_domain("GF(9)"), ParseError);
    auto [dom, rows] = parse_coeff_matrix("ring ZZ\n6 1 1\n1 1 1\n", CoeffDomain::rationals());
    CHECK(dom.name() == "ZZ");
    REQUIRE(rows.size() == 2);
    CHECK(dom.equal(rows[0][0], zz(6)));
  }

  TEST_CASE("rendering") {
    auto P = parse_problem("ring ZZ\nvars x y\norder lex\ngens:\nx - y\n3*y\n");
    auto G = buchberger(P.space, P.gens);
    auto doc = render(witness_report(P.space, witness(G)), Format::Machine);
    CHECK(doc.find("witness.value = 3\n") != std::string::npos);

    HilbertTable h;
    h.ranks = {1, 6, 18, 40};
    auto hd = render(hilbert_report(h), Format::Machine);
    CHECK(hd == "hilbert.0 = 1\nhilbert.1 = 6\nhilbert.2 = 18\nhilbert.3 = 40\n");

    std::vector<FreeElem> pair{elem(P, "2*x + y"), elem(P, "3*x")};
    auto bad = check_groebner(P.space, pair);
    auto cd = render(check_report(P.space, bad), Format::Machine);
    CHECK(cd.find("check.groebner = false\n") != std::string::npos);
    CHECK(cd.find("check.groebner.pair = (1,2)\n") != std::string::npos);

    // identical input, identical bytes
    CHECK(render(gb_report(G), Format::Machine) == render(gb_report(buchberger(P.space, P.gens)), Format::Machine));
    auto text = render(gb_report(G), Format::Text);
    CHECK(text.rfind("Groebner basis over ZZ\n", 0) == 0);
  }

  TEST_CASE("elements are parsed against the problem") {
    auto P = parse_problem("ring QQ\nvars x y\nmodule 2\ngens:\nx*e1\n");
    CHECK(parse_element(P, "0").is_zero());
    CHECK(str(P.space, parse_element(P, "1/2*y*e2 + x*e1")) == "x*e1 + 1/2*y*e2");
    CHECK_THROWS_AS(parse_element(P, "x*e3"), ParseError);
  }
}
