#include "gfree/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace gfree {

namespace {

enum class Tok { Ident, Int, Sym };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

struct Line {
  std::size_t number;
  std::vector<Token> toks;
};

std::vector<Line> tokenize(std::string_view text, std::size_t first_line = 1) {
  std::vector<Line> lines;
  std::size_t ln = first_line, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view s = text.substr(pos, end - pos);
    Line L{ln, {}};
    for (std::size_t i = 0; i < s.size();) {
      const char c = s[i];
      const std::size_t col = i + 1;
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        L.toks.push_back({Tok::Ident, std::string(s.substr(i, j - i)), ln, col});
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        L.toks.push_back({Tok::Int, std::string(s.substr(i, j - i)), ln, col});
        i = j;
      } else if (std::string_view("+-*/^()[]{}:,").find(c) != std::string_view::npos) {
        L.toks.push_back({Tok::Sym, std::string(1, c), ln, col});
        ++i;
      } else {
        throw ParseError(ln, col, std::string("unexpected character '") + c + "'");
      }
    }
    if (!L.toks.empty()) lines.push_back(std::move(L));
    pos = end + 1;
    ++ln;
  }
  return lines;
}

// Cursor over the tokens of one line.
class Cursor {
 public:
  Cursor(const Line& l) : l_(l) {}
  bool done() const { return i_ >= l_.toks.size(); }
  const Token* peek() const { return done() ? nullptr : &l_.toks[i_]; }
  bool is_sym(char c) const { return !done() && l_.toks[i_].kind == Tok::Sym && l_.toks[i_].text[0] == c; }
  bool is(Tok k) const { return !done() && l_.toks[i_].kind == k; }
  const Token& next() {
    if (done()) fail("unexpected end of line");
    return l_.toks[i_++];
  }
  const Token& expect(Tok k, const char* what) {
    if (!is(k)) fail(std::string("expected ") + what);
    return next();
  }
  void expect_sym(char c) {
    if (!is_sym(c)) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    if (done()) {
      const Token& last = l_.toks.back();
      throw ParseError(l_.number, last.col + last.text.size(), msg);
    }
    throw ParseError(l_.toks[i_].line, l_.toks[i_].col, msg);
  }
  std::size_t line() const { return l_.number; }
  std::size_t col() const { return done() ? l_.toks.back().col + l_.toks.back().text.size() : l_.toks[i_].col; }

 private:
  const Line& l_;
  std::size_t i_ = 0;
};

std::uint64_t small_int(const Token& t, const char* what) {
  if (t.text.size() > 9) throw ParseError(t.line, t.col, std::string(what) + " is too large");
  return std::stoull(t.text);
}

CoeffDomain parse_domain_tokens(Cursor& c) {
  const Token& head = c.expect(Tok::Ident, "a coefficient domain");
  auto var_suffix = [&]() -> std::optional<std::string> {
    if (!c.is_sym('[')) return std::nullopt;
    c.next();
    std::string v = c.expect(Tok::Ident, "a coefficient variable").text;
    c.expect_sym(']');
    return v;
  };
  if (head.text == "ZZ") return CoeffDomain::integers();
  if (head.text == "QQ") {
    if (auto v = var_suffix()) return CoeffDomain::poly_over_rationals(*v);
    return CoeffDomain::rationals();
  }
  if (head.text == "GF") {
    c.expect_sym('(');
    const Token& pt = c.expect(Tok::Int, "a prime");
    std::uint64_t p = small_int(pt, "characteristic");
    if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) throw ParseError(pt.line, pt.col, pt.text + " is not a supported prime");
    c.expect_sym(')');
    if (auto v = var_suffix()) return CoeffDomain::poly_over_prime_field(p, *v);
    return CoeffDomain::prime_field(p);
  }
  throw ParseError(head.line, head.col, "unknown coefficient domain '" + head.text + "'");
}

// Numeric literal p or p/q.
mpq_class parse_number(Cursor& c) {
  const Token& n = c.expect(Tok::Int, "a number");
  mpq_class v(mpz_class(n.text));
  if (c.is_sym('/')) {
    c.next();
    const Token& d = c.expect(Tok::Int, "a denominator");
    mpz_class den(d.text);
    if (den == 0) throw ParseError(d.line, d.col, "zero denominator");
    v = mpq_class(v.get_num(), den);
    v.canonicalize();
  }
  return v;
}

RingElem to_domain(const CoeffDomain& dom, const mpq_class& v, const Token& at) {
  try {
    return dom.from_mpq(v);
  } catch (const DomainError& e) {
    throw ParseError(at.line, at.col, e.what());
  }
}

// "{...}": a univariate polynomial in the coefficient variable.
RingElem parse_braced(Cursor& c, const CoeffDomain& dom) {
  const Token& open = *c.peek();
  if (!dom.is_polynomial()) throw ParseError(open.line, open.col, "braced coefficients need a polynomial domain");
  c.expect_sym('{');
  std::vector<mpq_class> coeffs;
  bool first = true;
  while (!c.is_sym('}')) {
    mpq_class sign = 1;
    if (c.is_sym('+') || c.is_sym('-')) {
      sign = c.next().text == "-" ? -1 : 1;
    } else if (!first) {
      c.fail("expected '+', '-' or '}'");
    }
    first = false;
    mpq_class a = 1;
    bool any = false;
    if (c.is(Tok::Int)) {
      a = parse_number(c);
      any = true;
      if (c.is_sym('*')) c.next();
    }
    std::size_t k = 0;
    if (c.is(Tok::Ident)) {
      const Token& v = c.next();
      if (v.text != dom.var()) throw ParseError(v.line, v.col, "expected the coefficient variable '" + dom.var() + "'");
      k = 1;
      if (c.is_sym('^')) {
        c.next();
        k = small_int(c.expect(Tok::Int, "an exponent"), "exponent");
      }
      any = true;
    }
    if (!any) c.fail("expected a coefficient term");
    if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
    coeffs[k] += sign * a;
  }
  c.expect_sym('}');
  try {
    return dom.from_coeffs(coeffs);
  } catch (const DomainError& e) {
    throw ParseError(open.line, open.col, e.what());
  }
}

bool is_basis_name(const std::string& s) {
  return s.size() > 1 && s[0] == 'e' && std::all_of(s.begin() + 1, s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

// Coefficient literal: integer, p/q or braced polynomial.
std::optional<RingElem> parse_coeff_literal(Cursor& c, const CoeffDomain& dom) {
  if (c.is(Tok::Int)) {
    const Token& at = *c.peek();
    return to_domain(dom, parse_number(c), at);
  }
  if (c.is_sym('{')) return parse_braced(c, dom);
  return std::nullopt;
}

FreeElem parse_elem_line(Cursor& c, const FreeModule& F, bool allow_zero) {
  const auto& dom = F.domain;
  const std::size_t start_col = c.col();
  std::vector<Term> terms;
  bool first = true;
  while (!c.done()) {
    bool negative = false;
    if (c.is_sym('+') || c.is_sym('-')) {
      negative = c.next().text == "-";
    } else if (!first) {
      c.fail("expected '+' or '-'");
    }
    first = false;

    Term t{dom.one(), Monomial(F.nvars()), 0};
    bool any = false, basis_set = false;
    const Token* coeff_tok = c.peek();
    if (auto lit = parse_coeff_literal(c, dom)) {
      if (dom.is_zero(*lit) && !allow_zero) throw ParseError(coeff_tok->line, coeff_tok->col, "zero coefficient literal");
      t.coeff = *lit;
      any = true;
    }
    for (;;) {
      bool star = false;
      if (c.is_sym('*')) {
        if (!any) c.fail("expected a term before '*'");
        c.next();
        star = true;
      }
      if (!c.is(Tok::Ident)) {
        if (star) c.fail("expected a variable or basis vector after '*'");
        break;
      }
      const Token& id = c.next();
      auto v = std::find(F.vars.begin(), F.vars.end(), id.text);
      if (v != F.vars.end()) {
        std::uint64_t e = 1;
        if (c.is_sym('^')) {
          c.next();
          e = small_int(c.expect(Tok::Int, "an exponent"), "exponent");
        }
        auto& slot = t.mono.exps[static_cast<std::size_t>(v - F.vars.begin())];
        if (slot + e > UINT32_MAX) throw ParseError(id.line, id.col, "exponent too large");
        slot += static_cast<std::uint32_t>(e);
      } else if (is_basis_name(id.text)) {
        if (basis_set) throw ParseError(id.line, id.col, "a term has at most one basis vector");
        std::uint64_t k = id.text.size() > 10 ? 0 : std::stoull(id.text.substr(1));
        if (k < 1 || k > F.rank)
          throw ParseError(id.line, id.col, "basis index " + id.text.substr(1) + " out of range 1.." + std::to_string(F.rank));
        t.basis = k - 1;
        basis_set = true;
      } else {
        throw ParseError(id.line, id.col, "unknown variable '" + id.text + "'");
      }
      any = true;
    }
    if (!any) c.fail("expected a term");
    if (negative) t.coeff = dom.neg(t.coeff);
    terms.push_back(std::move(t));
  }
  if (first) c.fail("expected an element");
  FreeElem w = make_elem(F, std::move(terms));
  if (w.is_zero() && !allow_zero) throw ParseError(c.line(), start_col, "zero generator");
  return w;
}

std::vector<std::int64_t> int_list(Cursor& c, const char* what) {
  std::vector<std::int64_t> out;
  while (!c.done()) {
    bool neg = false;
    if (c.is_sym('-')) {
      c.next();
      neg = true;
    }
    auto v = static_cast<std::int64_t>(small_int(c.expect(Tok::Int, what), what));
    out.push_back(neg ? -v : v);
  }
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

template <class T>
std::string join_ints(const std::vector<T>& xs, const std::string& sep = " ") {
  std::vector<std::string> s;
  for (auto x : xs) s.push_back(std::to_string(x));
  return join(s, sep);
}

}  // namespace

CoeffDomain parse_domain(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.size() != 1) throw ParseError(1, 1, "expected a coefficient domain");
  Cursor c(lines.front());
  CoeffDomain d = parse_domain_tokens(c);
  if (!c.done()) c.fail("trailing input after the domain");
  return d;
}

ProblemFile parse_problem(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty problem file");

  std::map<std::string, const Line*> stanza;
  std::size_t k = 0;
  for (; k < lines.size(); ++k) {
    const Line& L = lines[k];
    const Token& head = L.toks.front();
    if (head.kind != Tok::Ident) throw ParseError(head.line, head.col, "expected a stanza keyword");
    if (head.text == "gens") {
      if (L.toks.size() != 2 || L.toks[1].text != ":") throw ParseError(head.line, head.col, "expected 'gens:'");
      break;
    }
    static const char* known[] = {"ring", "vars", "order", "weights", "grading", "module"};
    if (std::none_of(std::begin(known), std::end(known), [&](const char* s) { return head.text == s; }))
      throw ParseError(head.line, head.col, "unknown stanza '" + head.text + "'");
    if (stanza.count(head.text)) throw ParseError(head.line, head.col, "duplicate '" + head.text + "' stanza");
    if (k == 0 && head.text != "ring") throw ParseError(head.line, head.col, "the file must start with 'ring'");
    stanza[head.text] = &L;
  }
  if (k == lines.size()) {
    const Line& L = lines.back();
    throw ParseError(L.number + 1, 1, "missing 'gens:' section");
  }
  const Line& gens_line = lines[k];

  ProblemFile P;
  FreeModule& F = P.space;
  {
    Cursor c(*stanza.at("ring"));
    c.next();
    F.domain = parse_domain_tokens(c);
    if (!c.done()) c.fail("trailing input after the domain");
  }
  if (!stanza.count("vars")) throw ParseError(gens_line.number, 1, "missing 'vars' stanza");
  {
    Cursor c(*stanza.at("vars"));
    c.next();
    while (!c.done()) {
      const Token& v = c.expect(Tok::Ident, "a variable name");
      if (std::find(F.vars.begin(), F.vars.end(), v.text) != F.vars.end())
        throw ParseError(v.line, v.col, "duplicate variable '" + v.text + "'");
      if (F.domain.is_polynomial() && v.text == F.domain.var())
        throw ParseError(v.line, v.col, "'" + v.text + "' is the coefficient variable");
      if (is_basis_name(v.text)) throw ParseError(v.line, v.col, "'" + v.text + "' is reserved for basis vectors");
      F.vars.push_back(v.text);
    }
    if (F.vars.empty()) c.fail("expected at least one variable");
  }
  const std::size_t r = F.nvars();

  F.order = OrderSpec::grevlex(r);
  if (auto it = stanza.find("order"); it != stanza.end()) {
    Cursor c(*it->second);
    c.next();
    const Token& b = c.expect(Tok::Ident, "lex, grlex or grevlex");
    if (b.text == "lex")
      F.order = OrderSpec::lex(r);
    else if (b.text == "grlex")
      F.order = OrderSpec::grlex(r);
    else if (b.text == "grevlex")
      F.order = OrderSpec::grevlex(r);
    else
      throw ParseError(b.line, b.col, "unknown order '" + b.text + "'");
    if (!c.done()) {
      std::vector<bool> seen(r, false);
      while (!c.done()) {
        const Token& v = c.expect(Tok::Ident, "a variable name");
        auto p = std::find(F.vars.begin(), F.vars.end(), v.text);
        if (p == F.vars.end()) throw ParseError(v.line, v.col, "unknown variable '" + v.text + "'");
        auto idx = static_cast<std::size_t>(p - F.vars.begin());
        if (seen[idx]) throw ParseError(v.line, v.col, "variable '" + v.text + "' ranked twice");
        seen[idx] = true;
        F.order.perm.push_back(idx);
      }
      if (F.order.perm.size() != r) throw ParseError(b.line, b.col, "the ranking must list every variable");
    }
  }
  if (auto it = stanza.find("weights"); it != stanza.end()) {
    Cursor c(*it->second);
    const Token& head = c.next();
    auto w = int_list(c, "a weight");
    if (w.size() != r) throw ParseError(head.line, head.col, "expected " + std::to_string(r) + " weights");
    if (std::any_of(w.begin(), w.end(), [](auto x) { return x < 0; }))
      throw ParseError(head.line, head.col, "weights must be non-negative");
    F.order.weights = w;
  }
  F.rank = 1;
  std::vector<std::int64_t> shifts{0};
  if (auto it = stanza.find("module"); it != stanza.end()) {
    Cursor c(*it->second);
    const Token& head = c.next();
    const Token& rt = c.expect(Tok::Int, "the module rank");
    F.rank = small_int(rt, "rank");
    if (F.rank < 1) throw ParseError(rt.line, rt.col, "rank must be positive");
    shifts = int_list(c, "a basis shift");
    if (shifts.empty()) shifts.assign(F.rank, 0);
    if (shifts.size() != F.rank) throw ParseError(head.line, head.col, "expected " + std::to_string(F.rank) + " basis shifts");
  }
  P.grading = Grading{std::vector<std::int64_t>(r, 1), shifts};
  if (auto it = stanza.find("grading"); it != stanza.end()) {
    Cursor c(*it->second);
    const Token& head = c.next();
    auto w = int_list(c, "a degree");
    if (w.size() != r) throw ParseError(head.line, head.col, "expected " + std::to_string(r) + " degrees");
    if (std::any_of(w.begin(), w.end(), [](auto x) { return x <= 0; }))
      throw ParseError(head.line, head.col, "degrees must be positive");
    P.grading.var_weights = w;
  }

  for (std::size_t i = k + 1; i < lines.size(); ++i) {
    const auto& toks = lines[i].toks;
    if (toks.size() == 1 && toks[0].kind == Tok::Int && mpz_class(toks[0].text) == 0)
      throw ParseError(toks[0].line, toks[0].col, "zero generator");
    Cursor c(lines[i]);
    P.gens.push_back(parse_elem_line(c, F, false));
  }
  if (P.gens.empty()) throw ParseError(gens_line.number, gens_line.toks.front().col, "no generators after 'gens:'");
  return P;
}

FreeElem parse_element(const ProblemFile& p, std::string_view text) {
  auto lines = tokenize(text);
  if (lines.size() != 1) throw ParseError(1, 1, "expected a single-line element");
  Cursor c(lines.front());
  return parse_elem_line(c, p.space, true);
}

std::string print_problem(const ProblemFile& p) {
  const FreeModule& F = p.space;
  std::ostringstream os;
  os << "ring " << F.domain.name() << "\n";
  os << "vars " << join(F.vars, " ") << "\n";
  const char* base = F.order.base == BaseOrder::Lex ? "lex" : F.order.base == BaseOrder::GrLex ? "grlex" : "grevlex";
  os << "order " << base;
  for (auto v : F.order.perm) os << " " << F.vars[v];
  os << "\n";
  if (F.order.weights) os << "weights " << join_ints(*F.order.weights) << "\n";
  if (std::any_of(p.grading.var_weights.begin(), p.grading.var_weights.end(), [](auto w) { return w != 1; }))
    os << "grading " << join_ints(p.grading.var_weights) << "\n";
  const bool shifted = std::any_of(p.grading.basis_shifts.begin(), p.grading.basis_shifts.end(), [](auto d) { return d != 0; });
  if (F.rank > 1 || shifted) {
    os << "module " << F.rank;
    if (shifted) os << " " << join_ints(p.grading.basis_shifts);
    os << "\n";
  }
  os << "gens:\n";
  for (const auto& g : p.gens) os << to_string(F, g) << "\n";
  return os.str();
}

bool same_problem(const ProblemFile& a, const ProblemFile& b) {
  if (!(a.space.domain == b.space.domain) || a.space.vars != b.space.vars || !(a.space.order == b.space.order) ||
      a.space.rank != b.space.rank || !(a.grading == b.grading) || a.gens.size() != b.gens.size())
    return false;
  for (std::size_t i = 0; i < a.gens.size(); ++i)
    if (!equal(a.space, a.gens[i], b.gens[i])) return false;
  return true;
}

std::vector<Point> parse_points(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.size() != 1) throw ParseError(1, 1, "expected a comma-separated list of points");
  Cursor c(lines.front());
  std::vector<Point> out;
  for (;;) {
    bool neg = false;
    if (c.is_sym('-')) {
      c.next();
      neg = true;
    }
    mpq_class v = parse_number(c);
    out.push_back(Point{neg ? mpq_class(-v) : v});
    if (c.done()) break;
    c.expect_sym(',');
  }
  return out;
}

std::pair<CoeffDomain, std::vector<std::vector<RingElem>>> parse_coeff_matrix(std::string_view text,
                                                                             const CoeffDomain& fallback) {
  auto lines = tokenize(text);
  CoeffDomain dom = fallback;
  std::size_t k = 0;
  if (!lines.empty() && lines[0].toks.front().kind == Tok::Ident && lines[0].toks.front().text == "ring") {
    Cursor c(lines[0]);
    c.next();
    dom = parse_domain_tokens(c);
    if (!c.done()) c.fail("trailing input after the domain");
    k = 1;
  }
  std::vector<std::vector<RingElem>> rows;
  for (; k < lines.size(); ++k) {
    Cursor c(lines[k]);
    std::vector<RingElem> row;
    while (!c.done()) {
      bool neg = false;
      if (c.is_sym('-')) {
        c.next();
        neg = true;
      }
      const Token& at = *c.peek();
      auto lit = parse_coeff_literal(c, dom);
      if (!lit) c.fail("expected a coefficient literal");
      if (dom.is_zero(*lit)) throw ParseError(at.line, at.col, "zero coefficient literal");
      row.push_back(neg ? dom.neg(*lit) : *lit);
      if (c.is_sym(',')) c.next();
    }
    rows.push_back(std::move(row));
  }
  return {dom, rows};
}

// ---------------------------------------------------------------------------

void Report::append(const Report& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

const std::string* Report::find(std::string_view key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return &v;
  return nullptr;
}

std::string render(const Report& r, Format f) {
  std::ostringstream os;
  if (f == Format::Machine) {
    for (const auto& [k, v] : r.entries) os << k << " = " << v << "\n";
    return os.str();
  }
  if (!r.title.empty()) os << r.title << "\n";
  std::size_t width = 0;
  for (const auto& e : r.entries) width = std::max(width, e.first.size());
  for (const auto& [k, v] : r.entries) os << "  " << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  return os.str();
}

namespace {

std::string term_list(const FreeModule& F, const std::vector<Term>& ts) {
  std::vector<std::string> s;
  for (const auto& t : ts) s.push_back(to_string(F, t));
  return "{" + join(s, ", ") + "}";
}

std::string point_status(const FiberResult& r) {
  if (r.equal) return "match";
  return r.kills_witness ? "differs (point divides the witness: no guarantee)" : "differs (unexpected)";
}

void add_fiber(Report& rep, const std::string& key, const FiberResult& r) {
  rep.add(key + ".point", to_string(r.point));
  rep.add(key + ".kills_witness", r.kills_witness);
  for (std::int64_t nu = r.table.lo; nu <= r.table.hi(); ++nu) rep.add(key + ".hilbert." + std::to_string(nu), r.table.at(nu));
  rep.add(key + ".equal", r.equal);
  if (!r.differing_degrees.empty()) rep.add(key + ".differs_at", join_ints(r.differing_degrees, ","));
  rep.add(key + ".status", point_status(r));
}

}  // namespace

Report gb_report(const GroebnerBasis& G) {
  const FreeModule& F = G.space;
  Report r{"Groebner basis over " + F.domain.name(), {}};
  r.add("gb.size", G.gens.size());
  for (std::size_t i = 0; i < G.gens.size(); ++i) r.add("gb.gen." + std::to_string(i + 1), to_string(F, G.gens[i]));
  r.add("gb.initial", term_list(F, G.initial_terms));
  r.add("check.groebner", G.certified);
  return r;
}

Report check_report(const FreeModule& F, const GroebnerCheck& c) {
  Report r{"Buchberger criterion", {}};
  r.add("check.groebner", c.ok);
  r.add("check.groebner.pairs", c.pairs_checked);
  if (c.failing) {
    r.add("check.groebner.pair", "(" + std::to_string(c.failing->i + 1) + "," + std::to_string(c.failing->j + 1) + ")");
    r.add("check.groebner.residue", to_string(F, c.residue));
  }
  return r;
}

Report initial_report(const GroebnerBasis& G) {
  const FreeModule& F = G.space;
  Report r{"Initial module", {}};
  auto in = initial_module(G);
  r.add("initial.size", in.size());
  for (std::size_t i = 0; i < in.size(); ++i) r.add("initial." + std::to_string(i + 1), to_string(F, in[i]));
  return r;
}

Report witness_report(const FreeModule& F, const Witness& w) {
  Report r{"Freeness witness", {}};
  r.add("witness.value", F.domain.to_string(w.value));
  r.add("witness.unit", F.domain.is_unit(w.value));
  for (std::size_t i = 0; i < w.factors.size(); ++i)
    r.add("witness.factor." + std::to_string(i + 1), F.domain.to_string(w.factors[i].first));
  r.add("witness.guarantee", "F/M is free over A_a on the standard monomials, a = " + F.domain.to_string(w.value));
  return r;
}

Report reduce_report(const FreeModule& F, const ReductionTrace& t, bool verified) {
  Report r{"Reduction", {}};
  r.add("reduce.remainder", to_string(F, t.remainder));
  r.add("reduce.scale", F.domain.to_string(t.scale));
  for (const auto& [i, q] : t.quotients) r.add("reduce.quotient." + std::to_string(i + 1), to_string(F.ring(), q));
  r.add("check.trace", verified);
  return r;
}

Report stdmon_report(const FreeModule& F, const std::vector<StandardMonomial>& s) {
  Report r{"Standard monomials", {}};
  r.add("stdmon.count", s.size());
  std::vector<std::string> xs;
  for (const auto& m : s) {
    std::string body = to_string(F, m.mono);
    if (F.rank > 1) body = (m.mono.is_one() ? "" : body + "*") + "e" + std::to_string(m.basis + 1);
    xs.push_back(body);
  }
  r.add("stdmon.list", "{" + join(xs, ", ") + "}");
  return r;
}

Report hilbert_report(const HilbertTable& h, const std::string& prefix) {
  Report r{"Hilbert function", {}};
  for (std::int64_t nu = h.lo; nu <= h.hi(); ++nu) r.add(prefix + "." + std::to_string(nu), h.at(nu));
  return r;
}

Report fiber_report(const FreeModule& F, const FiberReport& fr) {
  Report r{"Fiber comparison", {}};
  r.append(witness_report(F, fr.witness));
  r.append(hilbert_report(fr.generic));
  for (std::size_t k = 0; k < fr.fibers.size(); ++k) add_fiber(r, "fiber." + std::to_string(k + 1), fr.fibers[k]);
  r.add("check.fibers", fr.consistent);
  return r;
}

Report degeneration_report(const DegenerationData& D, const DegenerationReport* c) {
  Report r{"Flat degeneration", {}};
  r.add("degen.omega", join_ints(D.omega));
  r.add("degen.shifts", join_ints(D.shifts));
  r.add("degen.variable", D.extended.vars[D.t_index]);
  for (std::size_t i = 0; i < D.homogenized.size(); ++i)
    r.add("degen.gen." + std::to_string(i + 1), to_string(D.extended, D.homogenized[i]));
  if (!c) return r;
  r.add("check.degeneration.homogeneous", c->homogeneous);
  r.add("check.degeneration.t0", c->special_ok);
  if (c->special_failing) r.add("check.degeneration.t0.generator", *c->special_failing + 1);
  r.add("check.degeneration.t1", c->general_ok);
  if (c->general_failing) r.add("check.degeneration.t1.generator", *c->general_failing + 1);
  if (c->fibers_checked) {
    r.add("check.degeneration.point", c->point ? to_string(*c->point) : std::string("generic"));
    for (std::int64_t nu = c->special_table.lo; nu <= c->special_table.hi(); ++nu) {
      r.add("degen.t0.hilbert." + std::to_string(nu), c->special_table.at(nu));
      r.add("degen.t1.hilbert." + std::to_string(nu), c->general_table.at(nu));
    }
    if (!c->differing_degrees.empty()) r.add("check.degeneration.differs_at", join_ints(c->differing_degrees, ","));
    r.add("check.degeneration.fibers", c->differing_degrees.empty());
  }
  r.add("check.degeneration", c->ok());
  return r;
}

Report frobenius_report(const FreeModule& F, const FrobeniusReport& fr) {
  Report r{"Frobenius powers", {}};
  r.add("frobenius.p", static_cast<std::size_t>(fr.p));
  r.add("frobenius.e", static_cast<std::size_t>(fr.e));
  r.add("witness.value", F.domain.to_string(fr.witness_used.value));
  r.add("frobenius.initial_of_power", term_list(F, fr.initial_of_power));
  r.add("frobenius.power_of_initial", term_list(F, fr.power_of_initial));
  r.add("check.frobenius.forward", fr.power_in_initial);
  r.add("check.frobenius.backward", fr.initial_in_power);
  r.add("check.frobenius.equal", fr.equal_after_localization);
  return r;
}

Report squarefree_report_doc(const FreeModule& F, const SquarefreeReport& s) {
  Report r{"Square-free initial ideal", {}};
  r.add("sqfree.squarefree", s.squarefree);
  std::vector<std::string> off;
  for (const auto& m : s.offending) off.push_back(to_string(F, m));
  if (!off.empty()) r.add("sqfree.offending", "{" + join(off, ", ") + "}");
  r.add("witness.value", F.domain.to_string(s.witness.value));
  r.add("sqfree.contains_field", s.contains_field);
  r.add("sqfree.conclusion", s.conclusion);
  return r;
}

Report det_report(const DetInstance& inst, const std::vector<FreeElem>& minors, const DetReport& d) {
  const FreeModule& F = inst.space;
  Report r{"Determinantal instance " + std::to_string(inst.m) + "x" + std::to_string(inst.n) + ", t = " + std::to_string(inst.t) +
               " over " + F.domain.name(),
           {}};
  std::vector<std::string> h;
  for (auto [i, j] : antidiagonal_complement(inst.m, inst.n, inst.t, inst.sharp))
    h.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  r.add("det.exempt", "{" + join(h, ", ") + "}");
  r.add("det.sharp", inst.sharp);
  r.add("det.minors", minors.size());
  std::vector<Term> leads;
  for (const auto& w : minors) leads.push_back(w.lead());
  r.add("det.initial", term_list(F, leads));
  r.add("witness.value", F.domain.to_string(d.witness.value));
  r.add("check.groebner", d.certified);
  r.add("check.groebner.pairs", d.check.pairs_checked);
  if (d.check.failing)
    r.add("check.groebner.pair", "(" + std::to_string(d.check.failing->i + 1) + "," + std::to_string(d.check.failing->j + 1) + ")");
  r.add("det.additions", d.additions);
  r.add("sqfree.squarefree", d.sqfree.squarefree);
  r.append(hilbert_report(d.generic));
  for (std::size_t k = 0; k < d.fibers.size(); ++k) add_fiber(r, "fiber." + std::to_string(k + 1), d.fibers[k]);
  r.add("check.fibers", d.fibers_consistent);
  r.add("det.pass", d.pass);
  return r;
}

}  // namespace gfree
