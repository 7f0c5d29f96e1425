#include "gfree/degeneration.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gfree {

namespace {

using Row = std::vector<mpq_class>;

// Dense tableau simplex, Bland's rule. Minimizes c.x subject to A x = b,
// x >= 0, with b >= 0. Returns nullopt when infeasible.
std::optional<std::vector<mpq_class>> simplex(std::vector<Row> A, std::vector<mpq_class> b, const Row& c) {
  const std::size_t m = A.size(), n = c.size();
  const std::size_t cols = n + m;
  std::vector<Row> T(m, Row(cols + 1, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][cols] = b[i];
    basis[i] = n + i;
  }

  auto pivot = [&](std::size_t r, std::size_t col) {
    mpq_class p = T[r][col];
    for (auto& v : T[r]) v /= p;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (i == r || T[i][col] == 0) continue;
      mpq_class f = T[i][col];
      for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[r][j];
    }
    basis[r] = col;
  };

  auto run = [&](const Row& cost, std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed && !enter; ++j) {
        if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
        mpq_class z = cost[j];
        for (std::size_t i = 0; i < T.size(); ++i) z -= cost[basis[i]] * T[i][j];
        if (z < 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      mpq_class best;
      for (std::size_t i = 0; i < T.size(); ++i) {
        if (T[i][*enter] <= 0) continue;
        mpq_class ratio = T[i][cols] / T[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;  // unbounded
      pivot(*leave, *enter);
    }
  };

  Row phase1(cols, 0);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  run(phase1, cols);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n && T[i][cols] != 0) return std::nullopt;

  // Drive zero-level artificials out, dropping redundant rows.
  for (std::size_t i = 0; i < T.size();) {
    if (basis[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j)
      if (T[i][j] != 0) col = j;
    if (col) {
      pivot(i, *col);
      ++i;
    } else {
      T.erase(T.begin() + static_cast<std::ptrdiff_t>(i));
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  Row phase2(cols, 0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  if (!run(phase2, n)) return std::nullopt;

  std::vector<mpq_class> x(n, 0);
  for (std::size_t i = 0; i < T.size(); ++i)
    if (basis[i] < n) x[basis[i]] = T[i][cols];
  return x;
}

std::int64_t dot(const std::vector<std::int64_t>& w, const Monomial& m) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::int64_t p;
    if (__builtin_mul_overflow(w[i], static_cast<std::int64_t>(m.exps[i]), &p) || __builtin_add_overflow(s, p, &s))
      throw std::overflow_error("weighted degree overflow");
  }
  return s;
}

// Difference vectors x^n - x^m for x^n > x^m on a common basis vector.
std::vector<std::vector<std::int64_t>> constraints(const GroebnerBasis& G) {
  std::set<std::vector<std::int64_t>> out;
  const auto& F = G.space;
  for (const auto& g : G.gens)
    for (std::size_t a = 0; a < g.terms.size(); ++a)
      for (std::size_t b = a + 1; b < g.terms.size(); ++b) {
        const Term &s = g.terms[a], &t = g.terms[b];
        if (s.basis != t.basis) continue;
        const bool s_big = F.order.compare(s, t) > 0;
        const Monomial& hi = s_big ? s.mono : t.mono;
        const Monomial& lo = s_big ? t.mono : s.mono;
        std::vector<std::int64_t> v(F.nvars());
        for (std::size_t i = 0; i < v.size(); ++i)
          v[i] = static_cast<std::int64_t>(hi.exps[i]) - static_cast<std::int64_t>(lo.exps[i]);
        out.insert(std::move(v));
      }
  return {out.begin(), out.end()};
}

bool satisfies(const std::vector<std::vector<std::int64_t>>& cons, const std::vector<std::int64_t>& w) {
  if (std::any_of(w.begin(), w.end(), [](auto x) { return x < 1; })) return false;
  for (const auto& v : cons) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
    if (s < 1) return false;
  }
  return true;
}

std::optional<std::vector<std::int64_t>> lp_weight(const std::vector<std::vector<std::int64_t>>& cons, std::size_t r) {
  // omega = 1 + u, u >= 0:  v.u - s = 1 - v.1,  s >= 0.
  const std::size_t m = cons.size();
  std::vector<Row> A(m, Row(r + m, 0));
  std::vector<mpq_class> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < r; ++j) {
      A[i][j] = cons[i][j];
      sum += cons[i][j];
    }
    A[i][r + i] = -1;
    b[i] = 1 - sum;
    if (b[i] < 0) {
      for (auto& v : A[i]) v = -v;
      b[i] = -b[i];
    }
  }
  Row c(r + m, 0);
  for (std::size_t j = 0; j < r; ++j) c[j] = 1;
  auto x = simplex(std::move(A), std::move(b), c);
  if (!x) return std::nullopt;

  mpz_class den = 1;
  for (std::size_t j = 0; j < r; ++j) den = lcm(den, mpq_class((*x)[j] + 1).get_den());
  std::vector<mpz_class> w(r);
  mpz_class g = 0;
  for (std::size_t j = 0; j < r; ++j) {
    mpq_class v = ((*x)[j] + 1) * den;
    w[j] = v.get_num();
    g = gcd(g, w[j]);
  }
  std::vector<std::int64_t> out(r);
  for (std::size_t j = 0; j < r; ++j) {
    mpz_class v = w[j] / g;
    if (!v.fits_slong_p()) return std::nullopt;
    out[j] = v.get_si();
  }
  return out;
}

std::optional<std::vector<std::int64_t>> box_weight(const std::vector<std::vector<std::int64_t>>& cons, std::size_t r,
                                                    std::int64_t box) {
  std::vector<std::int64_t> w(r, 1);
  for (;;) {
    if (satisfies(cons, w)) return w;
    std::size_t k = 0;
    while (k < r && w[k] == box) w[k++] = 1;
    if (k == r) return std::nullopt;
    ++w[k];
  }
}

std::string fresh_name(const FreeModule& F) {
  auto taken = [&](const std::string& s) {
    return std::find(F.vars.begin(), F.vars.end(), s) != F.vars.end() || (F.domain.is_polynomial() && F.domain.var() == s);
  };
  if (!taken("t")) return "t";
  if (!taken("h")) return "h";
  for (int k = 0;; ++k)
    if (!taken("h" + std::to_string(k))) return "h" + std::to_string(k);
}

Monomial drop_last(const Monomial& m) {
  return Monomial(std::vector<std::uint32_t>(m.exps.begin(), m.exps.end() - 1));
}

bool same_term(const CoeffDomain& dom, const Term& a, const Term& b) {
  return a.basis == b.basis && a.mono == b.mono && dom.equal(a.coeff, b.coeff);
}

}  // namespace

std::vector<std::int64_t> weight_vector(const GroebnerBasis& G) {
  const std::size_t r = G.space.nvars();
  auto cons = constraints(G);
  if (cons.empty()) return std::vector<std::int64_t>(r, 1);
  if (auto w = lp_weight(cons, r); w && satisfies(cons, *w)) return *w;
  if (r <= 4)
    if (auto w = box_weight(cons, r, 16)) return *w;
  throw std::logic_error("no positive weight vector realizes the order on the basis");
}

std::int64_t weighted_degree(const Term& t, const std::vector<std::int64_t>& omega,
                             const std::vector<std::int64_t>& shifts) {
  std::int64_t d = dot(omega, t.mono);
  return t.basis < shifts.size() ? d + shifts[t.basis] : d;
}

std::int64_t weight_spread(const GroebnerBasis& G, const std::vector<std::int64_t>& omega) {
  std::int64_t B = 0;
  for (const auto& g : G.gens) {
    if (g.is_zero()) continue;
    std::int64_t lo = dot(omega, g.terms.front().mono), hi = lo;
    for (const auto& t : g.terms) {
      auto d = dot(omega, t.mono);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    B = std::max(B, hi - lo);
  }
  return B;
}

std::vector<std::int64_t> shift_vector(const GroebnerBasis& G, const std::vector<std::int64_t>& omega) {
  const std::int64_t B = weight_spread(G, omega);
  const auto l = static_cast<std::int64_t>(G.space.rank);
  std::vector<std::int64_t> d(G.space.rank);
  for (std::int64_t k = 1; k <= l; ++k) d[static_cast<std::size_t>(k - 1)] = (l - k + 1) * (B + 1);
  return d;
}

DegenerationData homogenize(const GroebnerBasis& G, const std::vector<std::int64_t>& omega,
                            const std::vector<std::int64_t>& shifts) {
  const FreeModule& F = G.space;
  const std::size_t r = F.nvars();
  if (omega.size() != r) throw std::invalid_argument("weight vector has wrong length");
  if (shifts.size() != F.rank) throw std::invalid_argument("shift vector has wrong length");
  if (!F.order.shifts.empty() || !F.order.grade_weights.empty() || F.order.tiebreak_skip)
    throw std::invalid_argument("source order is already a graded module order");

  DegenerationData D;
  D.omega = omega;
  D.shifts = shifts;
  D.source = G;
  D.t_index = r;
  D.extended = F;
  D.extended.vars.push_back(fresh_name(F));
  OrderSpec& o = D.extended.order;
  if (!o.perm.empty()) o.perm.push_back(r);
  if (o.weights) o.weights->push_back(0);
  o.grade_weights = omega;
  o.grade_weights.push_back(1);
  o.shifts = shifts;
  o.tiebreak_skip = r;
  D.extended.validate();

  for (std::size_t i = 0; i < G.gens.size(); ++i) {
    const auto& g = G.gens[i];
    const Term& lead = g.lead();
    const std::int64_t top = weighted_degree(lead, omega, shifts);
    std::vector<Term> terms;
    for (const auto& t : g.terms) {
      auto d = weighted_degree(t, omega, shifts);
      if (&t != &lead && d >= top)
        throw std::invalid_argument("leading term of generator " + std::to_string(i + 1) +
                                    " is not the unique term of top weighted degree");
      Monomial m = t.mono;
      m.exps.push_back(static_cast<std::uint32_t>(top - d));
      terms.push_back(Term{t.coeff, std::move(m), t.basis});
    }
    FreeElem h = make_elem(D.extended, std::move(terms));
    Monomial lm = lead.mono;
    lm.exps.push_back(0);
    if (!same_term(F.domain, h.lead(), Term{lead.coeff, lm, lead.basis}))
      throw std::logic_error("homogenized leading term differs from the source leading term");
    D.homogenized.push_back(std::move(h));
  }
  return D;
}

DegenerationData degenerate(const GroebnerBasis& G) {
  auto omega = weight_vector(G);
  auto d = shift_vector(G, omega);
  return homogenize(G, omega, d);
}

std::vector<FreeElem> at_t_zero(const DegenerationData& D) {
  std::vector<FreeElem> out;
  for (const auto& h : D.homogenized) {
    std::vector<Term> terms;
    for (const auto& t : h.terms)
      if (t.mono.exps[D.t_index] == 0) terms.push_back(Term{t.coeff, drop_last(t.mono), t.basis});
    out.push_back(make_elem(D.source.space, std::move(terms)));
  }
  return out;
}

std::vector<FreeElem> at_t_one(const DegenerationData& D) {
  std::vector<FreeElem> out;
  for (const auto& h : D.homogenized) {
    std::vector<Term> terms;
    for (const auto& t : h.terms) terms.push_back(Term{t.coeff, drop_last(t.mono), t.basis});
    out.push_back(make_elem(D.source.space, std::move(terms)));
  }
  return out;
}

DegenerationReport degeneration_check(const DegenerationData& D, std::optional<std::int64_t> bound,
                                      const BuchbergerOptions& bopts) {
  const FreeModule& F = D.source.space;
  const CoeffDomain& A = F.domain;
  DegenerationReport rep;
  rep.witness = A.one();

  Grading ext_grading{D.omega, D.shifts};
  ext_grading.var_weights.push_back(1);
  for (std::size_t i = 0; i < D.homogenized.size(); ++i)
    if (!is_homogeneous(D.homogenized[i], ext_grading) && rep.homogeneous) {
      rep.homogeneous = false;
      rep.not_homogeneous = i;
    }

  auto zero = at_t_zero(D);
  auto one = at_t_one(D);
  for (std::size_t i = 0; i < zero.size(); ++i) {
    const Term& lead = D.source.gens[i].lead();
    bool ok = zero[i].terms.size() == 1 && same_term(A, zero[i].terms.front(), lead);
    if (!ok && rep.special_ok) {
      rep.special_ok = false;
      rep.special_failing = i;
    }
    if (!equal(F, one[i], D.source.gens[i]) && rep.general_ok) {
      rep.general_ok = false;
      rep.general_failing = i;
    }
  }
  if (!bound) return rep;

  Witness a = witness(D.source);
  rep.witness = a.value;
  auto pts = default_points(A, a.value, 1);
  rep.fibers_checked = true;

  std::int64_t hi = *bound;
  for (auto d : D.shifts) hi = std::max(hi, d + *bound);
  Grading g{D.omega, D.shifts};
  rep.special_table = hilbert_function(F, D.source.initial_terms, g, 0, hi);

  HilbertTable whole;
  if (!pts.empty()) {
    rep.point = pts.front();
    Specialization s = specialize(D.extended, D.homogenized, *rep.point);
    whole = fiber_table(s.space, s.gens, 0, hi, ext_grading, bopts);
  } else {
    // GF(p)[t] with every scalar killing a: use the generic fiber instead,
    // i.e. standard monomials of a basis of E over A itself.
    BuchbergerOptions o = bopts;
    o.exec = Exec::Serial;
    GroebnerBasis E = buchberger(D.extended, D.homogenized, o);
    whole = hilbert_function(D.extended, E.initial_terms, ext_grading, 0, hi);
  }
  rep.general_table = whole;
  for (std::size_t k = whole.ranks.size(); k-- > 1;) rep.general_table.ranks[k] -= whole.ranks[k - 1];
  rep.general_table.grading = g;

  for (std::int64_t nu = 0; nu <= hi; ++nu)
    if (rep.special_table.at(nu) != rep.general_table.at(nu)) rep.differing_degrees.push_back(nu);
  return rep;
}

}  // namespace gfree
