#include "gfree/poly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gfree {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("degree overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("degree overflow");
  return r;
}

std::int64_t dot(const std::vector<std::int64_t>& w, const Monomial& m) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < m.exps.size(); ++i)
    if (m.exps[i]) s = checked_add(s, checked_mul(w[i], m.exps[i]));
  return s;
}

}  // namespace

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
}

std::int64_t Monomial::total_degree() const {
  std::int64_t s = 0;
  for (auto e : exps) s += e;
  return s;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps.begin(), exps.end(), [](auto e) { return e <= 1; });
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomial dimension mismatch");
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (__builtin_add_overflow(a.exps[i], b.exps[i], &r.exps[i])) throw std::overflow_error("exponent overflow");
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.exps[i] > b.exps[i]) throw std::invalid_argument("monomial does not divide");
    r.exps[i] = b.exps[i] - a.exps[i];
  }
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
  return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps[i] = std::min(a.exps[i], b.exps[i]);
  return r;
}

Monomial mono_pow(const Monomial& a, std::uint64_t e) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(a.exps[i]) * e;
    if (e != 0 && v / e != a.exps[i]) throw std::overflow_error("exponent overflow");
    if (v > std::numeric_limits<std::uint32_t>::max()) throw std::overflow_error("exponent overflow");
    r.exps[i] = static_cast<std::uint32_t>(v);
  }
  return r;
}

// ---------------------------------------------------------------------------

OrderSpec OrderSpec::lex(std::size_t) {
  OrderSpec o;
  o.base = BaseOrder::Lex;
  return o;
}
OrderSpec OrderSpec::grlex(std::size_t) {
  OrderSpec o;
  o.base = BaseOrder::GrLex;
  return o;
}
OrderSpec OrderSpec::grevlex(std::size_t) {
  OrderSpec o;
  o.base = BaseOrder::GrevLex;
  return o;
}

void OrderSpec::validate(std::size_t nvars) const {
  if (!perm.empty()) {
    if (perm.size() != nvars) throw std::invalid_argument("order permutation has wrong length");
    std::vector<bool> seen(nvars, false);
    for (auto v : perm) {
      if (v >= nvars || seen[v]) throw std::invalid_argument("order permutation is not a permutation");
      seen[v] = true;
    }
  }
  if (weights) {
    if (weights->size() != nvars) throw std::invalid_argument("weight vector has wrong length");
    for (auto w : *weights)
      if (w < 0) throw std::invalid_argument("weights must be non-negative");
  }
  if (!grade_weights.empty()) {
    if (grade_weights.size() != nvars) throw std::invalid_argument("degree weight vector has wrong length");
    for (auto w : grade_weights)
      if (w <= 0) throw std::invalid_argument("degree weights must be positive");
  }
  if (!shifts.empty() && !weights && grade_weights.empty())
    throw std::invalid_argument("basis shifts require a weight vector");
  if (tiebreak_skip) {
    const auto& w = grade_weights.empty() ? weights.value_or(std::vector<std::int64_t>{}) : grade_weights;
    if (*tiebreak_skip >= nvars || w.size() != nvars || w[*tiebreak_skip] <= 0)
      throw std::invalid_argument("skipped tie-break variable needs a positive weight");
  }
}

std::strong_ordering OrderSpec::compare_base(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  const std::size_t skip = tiebreak_skip.value_or(n);
  auto degree = [&](const Monomial& m) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (i != skip) s += m.exps[i];
    return s;
  };
  if (base != BaseOrder::Lex) {
    auto da = degree(a), db = degree(b);
    if (da != db) return da <=> db;
  }
  if (base == BaseOrder::GrevLex) {
    for (std::size_t k = n; k-- > 0;) {
      std::size_t v = var_at(k);
      if (v == skip) continue;
      if (a.exps[v] != b.exps[v]) return b.exps[v] <=> a.exps[v];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t v = var_at(k);
    if (v == skip) continue;
    if (a.exps[v] != b.exps[v]) return a.exps[v] <=> b.exps[v];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering OrderSpec::compare_monomials(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("monomial dimension mismatch");
  if (!grade_weights.empty()) {
    auto ga = dot(grade_weights, a), gb = dot(grade_weights, b);
    if (ga != gb) return ga <=> gb;
  }
  if (weights) {
    auto wa = dot(*weights, a), wb = dot(*weights, b);
    if (wa != wb) return wa <=> wb;
  }
  return compare_base(a, b);
}

std::strong_ordering OrderSpec::compare(const Monomial& a, std::size_t ia, const Monomial& b, std::size_t ib) const {
  if (!shifts.empty()) {
    const auto& w = grade_weights.empty() ? *weights : grade_weights;
    auto da = checked_add(dot(w, a), shifts.at(ia));
    auto db = checked_add(dot(w, b), shifts.at(ib));
    if (da != db) return da <=> db;
  }
  if (ia != ib) return ib <=> ia;  // e_1 > e_2 > ...
  return compare_monomials(a, b);
}

// ---------------------------------------------------------------------------

Grading Grading::standard(std::size_t nvars, std::size_t rank) {
  return Grading{std::vector<std::int64_t>(nvars, 1), std::vector<std::int64_t>(rank, 0)};
}

void Grading::validate(std::size_t nvars, std::size_t rank) const {
  if (var_weights.size() != nvars) throw std::invalid_argument("grading has wrong number of weights");
  for (auto w : var_weights)
    if (w <= 0) throw std::invalid_argument("grading weights must be positive");
  if (!basis_shifts.empty() && basis_shifts.size() != rank)
    throw std::invalid_argument("grading has wrong number of basis shifts");
}

std::int64_t Grading::degree(const Monomial& m, std::size_t basis) const {
  std::int64_t d = dot(var_weights, m);
  if (basis < basis_shifts.size()) d = checked_add(d, basis_shifts[basis]);
  return d;
}

const Term& FreeElem::lead() const {
  if (terms.empty()) throw std::invalid_argument("leading term of zero element");
  return terms.front();
}

FreeModule FreeModule::ring() const {
  FreeModule r = *this;
  r.rank = 1;
  if (!r.order.shifts.empty()) r.order.shifts = {0};
  return r;
}

void FreeModule::validate() const {
  if (rank == 0) throw std::invalid_argument("module rank must be positive");
  order.validate(nvars());
  if (!order.shifts.empty() && order.shifts.size() != rank)
    throw std::invalid_argument("order shifts must match module rank");
}

std::strong_ordering compare(const FreeModule& F, const Term& s, const Term& t) {
  if (s.mono.size() != F.nvars() || t.mono.size() != F.nvars())
    throw std::invalid_argument("term dimension mismatch");
  return F.order.compare(s, t);
}

FreeElem make_elem(const FreeModule& F, std::vector<Term> terms) {
  const auto& dom = F.domain;
  std::erase_if(terms, [&](const Term& t) { return dom.is_zero(t.coeff); });
  for (const auto& t : terms) {
    if (t.mono.size() != F.nvars()) throw std::invalid_argument("term dimension mismatch");
    if (t.basis >= F.rank) throw std::invalid_argument("basis index out of range");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return F.order.compare(a, b) > 0; });
  FreeElem out;
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().basis == t.basis && out.terms.back().mono == t.mono) {
      out.terms.back().coeff = dom.add(out.terms.back().coeff, t.coeff);
      if (dom.is_zero(out.terms.back().coeff)) out.terms.pop_back();
    } else {
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

namespace {

template <class CoeffOp>
FreeElem merge(const FreeModule& F, const FreeElem& a, const FreeElem& b, CoeffOp on_b, bool subtract) {
  const auto& dom = F.domain;
  FreeElem out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      out.terms.push_back(a.terms[i++]);
      continue;
    }
    Term tb = on_b(b.terms[j]);
    if (i == a.terms.size()) {
      if (subtract) tb.coeff = dom.neg(tb.coeff);
      out.terms.push_back(std::move(tb));
      ++j;
      continue;
    }
    auto c = F.order.compare(a.terms[i], tb);
    if (c > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      if (subtract) tb.coeff = dom.neg(tb.coeff);
      out.terms.push_back(std::move(tb));
      ++j;
    } else {
      RingElem s = subtract ? dom.sub(a.terms[i].coeff, tb.coeff) : dom.add(a.terms[i].coeff, tb.coeff);
      if (!dom.is_zero(s)) out.terms.push_back(Term{std::move(s), a.terms[i].mono, a.terms[i].basis});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

FreeElem add(const FreeModule& F, const FreeElem& a, const FreeElem& b) {
  return merge(F, a, b, [](const Term& t) { return t; }, false);
}

FreeElem sub(const FreeModule& F, const FreeElem& a, const FreeElem& b) {
  return merge(F, a, b, [](const Term& t) { return t; }, true);
}

FreeElem neg(const FreeModule& F, const FreeElem& a) {
  FreeElem r = a;
  for (auto& t : r.terms) t.coeff = F.domain.neg(t.coeff);
  return r;
}

FreeElem scale(const FreeModule& F, const FreeElem& a, const RingElem& c) {
  if (F.domain.is_zero(c)) return {};
  FreeElem r = a;
  for (auto& t : r.terms) t.coeff = F.domain.mul(t.coeff, c);
  return r;
}

FreeElem mul_term(const FreeModule& F, const FreeElem& a, const RingElem& c, const Monomial& mono) {
  if (F.domain.is_zero(c)) return {};
  FreeElem r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) r.terms.push_back(Term{F.domain.mul(t.coeff, c), mono_mul(t.mono, mono), t.basis});
  return r;
}

FreeElem sub_mul_term(const FreeModule& F, const FreeElem& a, const RingElem& c, const Monomial& mono,
                      const FreeElem& b) {
  if (F.domain.is_zero(c)) return a;
  return merge(
      F, a, b, [&](const Term& t) { return Term{F.domain.mul(t.coeff, c), mono_mul(t.mono, mono), t.basis}; }, true);
}

FreeElem mul_poly(const FreeModule& F, const FreeElem& f, const FreeElem& w) {
  FreeElem acc;
  for (const auto& t : f.terms) {
    if (t.basis != 0) throw std::invalid_argument("ring multiplier must live on basis 0");
    acc = add(F, acc, mul_term(F, w, t.coeff, t.mono));
  }
  return acc;
}

bool equal(const FreeModule& F, const FreeElem& a, const FreeElem& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const auto& s = a.terms[i];
    const auto& t = b.terms[i];
    if (s.basis != t.basis || !(s.mono == t.mono) || !F.domain.equal(s.coeff, t.coeff)) return false;
  }
  return true;
}

Term leading_term(const FreeModule& F, const FreeElem& w) {
  if (w.is_zero()) throw std::invalid_argument("leading term of zero element");
  const Term* best = &w.terms.front();
  for (const auto& t : w.terms)
    if (compare(F, t, *best) > 0) best = &t;
  return *best;
}

FreeElem resort(const FreeModule& F, FreeElem w) { return make_elem(F, std::move(w.terms)); }

FreeElem unit_normalize(const FreeModule& F, const FreeElem& w) {
  if (w.is_zero()) return w;
  RingElem u = F.domain.normal_unit(w.lead().coeff);
  if (F.domain.is_one(u)) return w;
  return scale(F, w, u);
}

std::int64_t graded_degree(const Term& t, const Grading& g) { return g.degree(t.mono, t.basis); }

bool is_homogeneous(const FreeElem& w, const Grading& g) {
  if (w.terms.empty()) return true;
  auto d = graded_degree(w.terms.front(), g);
  return std::all_of(w.terms.begin(), w.terms.end(), [&](const Term& t) { return graded_degree(t, g) == d; });
}

Term term_mul(const FreeModule& F, const Term& a, const Term& b) {
  if (a.basis != 0 && b.basis != 0) throw std::invalid_argument("product of two module terms");
  return Term{F.domain.mul(a.coeff, b.coeff), mono_mul(a.mono, b.mono), a.basis + b.basis};
}

std::string to_string(const FreeModule& F, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m.exps[i]) continue;
    if (!first) os << '*';
    first = false;
    os << F.vars[i];
    if (m.exps[i] > 1) os << '^' << m.exps[i];
  }
  return first ? "1" : os.str();
}

namespace {

// Body of a term without its sign; `negative` reports a hoisted minus.
std::string term_body(const FreeModule& F, const Term& t, bool& negative) {
  const auto& dom = F.domain;
  negative = dom.is_negative(t.coeff);
  RingElem mag = negative ? dom.neg(t.coeff) : t.coeff;
  std::vector<std::string> parts;
  bool const_mono = t.mono.is_one();
  bool show_basis = F.rank > 1;
  if (!dom.is_one(mag) || (const_mono && !show_basis)) parts.push_back(dom.to_string(mag));
  if (!const_mono) parts.push_back(to_string(F, t.mono));
  if (show_basis) parts.push_back("e" + std::to_string(t.basis + 1));
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "*" : "") + parts[i];
  return s;
}

}  // namespace

std::string to_string(const FreeModule& F, const Term& t) {
  bool negative;
  std::string body = term_body(F, t, negative);
  return negative ? "-" + body : body;
}

std::string to_string(const FreeModule& F, const FreeElem& w) {
  if (w.terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < w.terms.size(); ++i) {
    bool negative;
    std::string body = term_body(F, w.terms[i], negative);
    if (i == 0)
      s += negative ? "-" + body : body;
    else
      s += (negative ? " - " : " + ") + body;
  }
  return s;
}

}  // namespace gfree
