#include "gfree/freeness.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gfree {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Hilbert function overflow");
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Hilbert function overflow");
  return r;
}

std::int64_t weighted(const Monomial& m, const std::vector<std::int64_t>& w) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s = add_checked(s, mul_checked(w[i], m.exps[i]));
  return s;
}

// Enumerates monomials with weighted degree <= maxdeg.
void enumerate(std::size_t nvars, const std::vector<std::int64_t>& w, std::int64_t maxdeg,
               const std::function<void(const Monomial&, std::int64_t)>& f) {
  if (maxdeg < 0) return;
  Monomial m(nvars);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t v, std::int64_t deg) {
    if (v == nvars) {
      f(m, deg);
      return;
    }
    for (std::uint32_t e = 0; deg + static_cast<std::int64_t>(e) * w[v] <= maxdeg; ++e) {
      m.exps[v] = e;
      rec(v + 1, deg + static_cast<std::int64_t>(e) * w[v]);
    }
    m.exps[v] = 0;
  };
  rec(0, 0);
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exps < b.exps;
  });
  std::vector<Monomial> out;
  for (auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& m) { return mono_divides(m, g); }))
      out.push_back(std::move(g));
  return out;
}

std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add_checked(r[i + j], mul_checked(a[i], b[j]));
  return r;
}

std::vector<std::int64_t> poly_add(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b,
                                   std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] = add_checked(a[j + shift], b[j]);
  return a;
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
  const std::size_t n = gens.empty() ? 0 : gens.front().size();
  std::vector<int> used(n, 0);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < n; ++v)
      if (g.exps[v] && used[v]++) return false;
  return true;
}

// Counts of monomials in each weighted degree 0..hi.
std::vector<std::int64_t> monomial_counts(const std::vector<std::int64_t>& w, std::int64_t hi) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(hi + 1), 0);
  c[0] = 1;
  for (auto wi : w)
    for (std::int64_t d = wi; d <= hi; ++d) c[d] = add_checked(c[d], c[d - wi]);
  return c;
}

}  // namespace

std::int64_t HilbertTable::at(std::int64_t nu) const {
  if (nu < lo || nu > hi()) throw std::out_of_range("degree outside the table range");
  return ranks[static_cast<std::size_t>(nu - lo)];
}

Witness witness(const GroebnerBasis& G, bool refine) {
  const auto& dom = G.space.domain;
  Witness out{dom.one(), {}};
  for (std::size_t i = 0; i < G.gens.size(); ++i) {
    const Term& li = G.gens[i].lead();
    RingElem c = dom.normalize(li.coeff);
    if (refine) {
      for (const auto& g : G.gens) {
        const Term& lj = g.lead();
        if (lj.basis == li.basis && mono_divides(lj.mono, li.mono)) c = dom.gcd(c, lj.coeff);
      }
    }
    out.factors.emplace_back(c, i);
    if (!dom.is_unit(c)) out.value = dom.lcm(out.value, c);
  }
  out.value = dom.normalize(out.value);
  return out;
}

std::vector<StandardMonomial> standard_monomials(const FreeModule& F, const std::vector<Term>& initials,
                                                 const Witness& a, std::int64_t bound, const Grading& g) {
  g.validate(F.nvars(), F.rank);
  for (const auto& t : initials) {
    if (!F.domain.is_unit(F.domain.core(t.coeff, a.value)))
      throw DomainError("initial coefficient " + F.domain.to_string(t.coeff) + " is not invertible after inverting " +
                        F.domain.to_string(a.value));
  }
  std::vector<StandardMonomial> out;
  for (std::size_t k = 0; k < F.rank; ++k) {
    std::int64_t shift = k < g.basis_shifts.size() ? g.basis_shifts[k] : 0;
    enumerate(F.nvars(), g.var_weights, bound - shift, [&](const Monomial& m, std::int64_t d) {
      bool inside = std::any_of(initials.begin(), initials.end(),
                                [&](const Term& t) { return t.basis == k && mono_divides(t.mono, m); });
      if (!inside) out.push_back(StandardMonomial{m, k, d + shift});
    });
  }
  std::stable_sort(out.begin(), out.end(), [&](const StandardMonomial& x, const StandardMonomial& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return F.order.compare(x.mono, x.basis, y.mono, y.basis) > 0;
  });
  return out;
}

std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, const std::vector<std::int64_t>& weights) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (pairwise_coprime(gens)) {
    std::vector<std::int64_t> acc{1};
    for (const auto& g : gens) {
      std::vector<std::int64_t> f(static_cast<std::size_t>(weighted(g, weights) + 1), 0);
      f[0] = 1;
      f.back() -= 1;
      acc = poly_mul(acc, f);
    }
    return acc;
  }
  // Pivot on the variable that occurs in the most generators:
  //   N(I) = N(I + (x)) + t^deg(x) N(I : x)
  const std::size_t n = gens.front().size();
  std::vector<int> occ(n, 0);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < n; ++v)
      if (g.exps[v]) ++occ[v];
  std::size_t piv = static_cast<std::size_t>(std::max_element(occ.begin(), occ.end()) - occ.begin());

  std::vector<Monomial> sum_gens, colon_gens;
  Monomial x(n);
  x.exps[piv] = 1;
  for (const auto& g : gens) {
    if (!g.exps[piv]) sum_gens.push_back(g);
    Monomial c = g;
    if (c.exps[piv]) --c.exps[piv];
    colon_gens.push_back(std::move(c));
  }
  sum_gens.push_back(x);
  auto a = hilbert_numerator(std::move(sum_gens), weights);
  auto b = hilbert_numerator(std::move(colon_gens), weights);
  return poly_add(std::move(a), b, static_cast<std::size_t>(weights[piv]));
}

HilbertTable hilbert_function(const FreeModule& F, const std::vector<Term>& initials, const Grading& g,
                              std::int64_t lo, std::int64_t hi) {
  g.validate(F.nvars(), F.rank);
  if (hi < lo) throw std::invalid_argument("empty degree range");
  HilbertTable out{g, lo, std::vector<std::int64_t>(static_cast<std::size_t>(hi - lo + 1), 0)};
  if (hi < 0) return out;
  const auto counts = monomial_counts(g.var_weights, hi - std::min<std::int64_t>(0, lo) + 1);
  for (std::size_t k = 0; k < F.rank; ++k) {
    std::int64_t shift = k < g.basis_shifts.size() ? g.basis_shifts[k] : 0;
    std::vector<Monomial> gens;
    for (const auto& t : initials)
      if (t.basis == k) gens.push_back(t.mono);
    auto num = hilbert_numerator(std::move(gens), g.var_weights);
    for (std::int64_t nu = lo; nu <= hi; ++nu) {
      std::int64_t d = nu - shift, s = 0;
      for (std::size_t j = 0; j < num.size() && static_cast<std::int64_t>(j) <= d; ++j)
        if (num[j]) s = add_checked(s, mul_checked(num[j], counts[static_cast<std::size_t>(d - static_cast<std::int64_t>(j))]));
      auto& slot = out.ranks[static_cast<std::size_t>(nu - lo)];
      slot = add_checked(slot, s);
    }
  }
  return out;
}

HilbertTable hilbert_function_bruteforce(const FreeModule& F, const std::vector<Term>& initials, const Grading& g,
                                         std::int64_t lo, std::int64_t hi) {
  g.validate(F.nvars(), F.rank);
  if (hi < lo) throw std::invalid_argument("empty degree range");
  HilbertTable out{g, lo, std::vector<std::int64_t>(static_cast<std::size_t>(hi - lo + 1), 0)};
  for (std::size_t k = 0; k < F.rank; ++k) {
    std::int64_t shift = k < g.basis_shifts.size() ? g.basis_shifts[k] : 0;
    enumerate(F.nvars(), g.var_weights, hi - shift, [&](const Monomial& m, std::int64_t d) {
      std::int64_t nu = d + shift;
      if (nu < lo) return;
      bool inside = std::any_of(initials.begin(), initials.end(),
                                [&](const Term& t) { return t.basis == k && mono_divides(t.mono, m); });
      if (!inside) ++out.ranks[static_cast<std::size_t>(nu - lo)];
    });
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(const Point& p) { return p.value.get_str(); }

CoeffDomain residue_field(const CoeffDomain& A, const Point& p) {
  switch (A.kind()) {
    case DomainKind::Integers: {
      if (p.value.get_den() != 1 || p.value <= 1 || !p.value.get_num().fits_ulong_p() ||
          !is_prime(p.value.get_num().get_ui()))
        throw DomainError("fiber point over ZZ must be a prime, got " + to_string(p));
      return CoeffDomain::prime_field(p.value.get_num().get_ui());
    }
    case DomainKind::PolyOverPrimeField:
    case DomainKind::PolyOverRationals: return A.base_field();
    case DomainKind::Rationals:
    case DomainKind::PrimeField: return A;
  }
  throw DomainError("unreachable");
}

RingElem specialize_coeff(const CoeffDomain& A, const RingElem& c, const CoeffDomain& kappa, const Point& p) {
  switch (A.kind()) {
    case DomainKind::Integers: return A.reduce_mod(c, kappa);
    case DomainKind::PolyOverPrimeField:
    case DomainKind::PolyOverRationals: return A.evaluate(c, kappa.from_mpq(p.value), kappa);
    case DomainKind::Rationals:
    case DomainKind::PrimeField: return c;
  }
  throw DomainError("unreachable");
}

bool kills(const CoeffDomain& A, const RingElem& a, const Point& p) {
  CoeffDomain kappa = residue_field(A, p);
  return kappa.is_zero(specialize_coeff(A, a, kappa, p));
}

Specialization specialize(const FreeModule& F, const std::vector<FreeElem>& gens, const Point& p) {
  Specialization out;
  out.space = F;
  out.space.domain = residue_field(F.domain, p);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    FreeElem w;
    for (const auto& t : gens[i].terms) {
      RingElem c = specialize_coeff(F.domain, t.coeff, out.space.domain, p);
      if (!out.space.domain.is_zero(c)) w.terms.push_back(Term{std::move(c), t.mono, t.basis});
    }
    if (w.is_zero())
      out.vanished.push_back(i);
    else
      out.gens.push_back(std::move(w));
  }
  return out;
}

std::vector<Point> default_points(const CoeffDomain& A, const RingElem& a, std::size_t count) {
  std::vector<Point> out;
  switch (A.kind()) {
    case DomainKind::Integers:
      for (unsigned long q = 2; out.size() < count; ++q)
        if (is_prime(q) && !kills(A, a, Point{mpq_class(q)})) out.push_back(Point{mpq_class(q)});
      break;
    case DomainKind::PolyOverPrimeField:
      for (std::uint64_t s = 0; s < A.characteristic() && out.size() < count; ++s)
        if (!kills(A, a, Point{mpq_class(s)})) out.push_back(Point{mpq_class(s)});
      break;
    case DomainKind::PolyOverRationals:
      for (long s = 0; out.size() < count; ++s)
        if (!kills(A, a, Point{mpq_class(s)})) out.push_back(Point{mpq_class(s)});
      break;
    case DomainKind::Rationals:
    case DomainKind::PrimeField: out.push_back(Point{mpq_class(0)}); break;
  }
  return out;
}

HilbertTable fiber_table(const FreeModule& F, const std::vector<FreeElem>& gens, std::int64_t lo, std::int64_t hi,
                         const Grading& g, const BuchbergerOptions& bopts) {
  std::vector<Term> initials;
  if (!gens.empty()) {
    BuchbergerOptions o = bopts;
    o.exec = Exec::Serial;
    GroebnerBasis G = buchberger(F, gens, o);
    initials = G.initial_terms;
  }
  return hilbert_function(F, initials, g, lo, hi);
}

FiberReport fiber_compare(const FreeModule& F, const std::vector<FreeElem>& gens, const std::vector<Point>& points,
                          std::int64_t lo, std::int64_t hi, const Grading& g, Exec exec,
                          const BuchbergerOptions& bopts) {
  g.validate(F.nvars(), F.rank);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!is_homogeneous(gens[i], g))
      throw std::invalid_argument("generator " + std::to_string(i + 1) + " is not homogeneous for the grading");

  FiberReport out;
  out.generic_basis.space = F;
  out.generic_basis.certified = true;
  if (!gens.empty()) out.generic_basis = buchberger(F, gens, bopts);
  out.witness = witness(out.generic_basis);
  out.generic = hilbert_function(F, out.generic_basis.initial_terms, g, lo, hi);

  out.fibers.resize(points.size());
  for_each_index(exec, points.size(), [&](std::size_t k) {
    FiberResult& r = out.fibers[k];
    r.point = points[k];
    r.kills_witness = kills(F.domain, out.witness.value, points[k]);
    Specialization s = specialize(F, gens, points[k]);
    r.vanished = s.vanished;
    r.table = fiber_table(s.space, s.gens, lo, hi, g, bopts);
    for (std::int64_t nu = lo; nu <= hi; ++nu)
      if (r.table.at(nu) != out.generic.at(nu)) r.differing_degrees.push_back(nu);
    r.equal = r.differing_degrees.empty();
  });
  for (const auto& r : out.fibers)
    if (!r.kills_witness && !r.equal) out.consistent = false;
  return out;
}

}  // namespace gfree
