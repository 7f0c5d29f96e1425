#include "fuzz.hpp"

namespace gfree::testing {

RingElem random_coeff(const CoeffDomain& dom, Rng& rng, long range) {
  for (;;) {
    RingElem c;
    if (dom.is_polynomial()) {
      std::uniform_int_distribution<int> deg(0, 2), val(-static_cast<int>(range), static_cast<int>(range));
      std::vector<mpq_class> cs(static_cast<std::size_t>(deg(rng)) + 1);
      for (auto& x : cs) x = val(rng);
      c = dom.from_coeffs(cs);
    } else {
      std::uniform_int_distribution<long> val(-range, range);
      c = dom.from_int(val(rng));
    }
    if (!dom.is_zero(c)) return c;
  }
}

Monomial random_monomial(std::size_t nvars, std::uint32_t degree, Rng& rng) {
  Monomial m(nvars);
  if (nvars == 0) return m;
  std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
  for (std::uint32_t k = 0; k < degree; ++k) ++m.exps[pick(rng)];
  return m;
}

Monomial random_monomial_upto(std::size_t nvars, std::uint32_t max_degree, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, max_degree);
  return random_monomial(nvars, d(rng), rng);
}

FreeElem random_elem(const FreeModule& F, Rng& rng, std::size_t terms, std::uint32_t max_degree, long range,
                     std::optional<std::uint32_t> degree) {
  std::uniform_int_distribution<std::size_t> nterms(1, terms), basis(0, F.rank - 1);
  for (;;) {
    std::vector<Term> ts;
    const std::size_t k = nterms(rng);
    for (std::size_t i = 0; i < k; ++i) {
      Monomial m = degree ? random_monomial(F.nvars(), *degree, rng) : random_monomial_upto(F.nvars(), max_degree, rng);
      ts.push_back(Term{random_coeff(F.domain, rng, range), std::move(m), basis(rng)});
    }
    FreeElem w = make_elem(F, std::move(ts));
    if (!w.is_zero()) return w;
  }
}

OrderSpec random_order(std::size_t nvars, Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  switch (kind(rng)) {
    case 0: return OrderSpec::lex(nvars);
    case 1: return OrderSpec::grlex(nvars);
    default: return OrderSpec::grevlex(nvars);
  }
}

Instance random_instance(const CoeffDomain& dom, Rng& rng, const FuzzParams& p) {
  std::uniform_int_distribution<std::size_t> nv(1, p.max_vars), ng(1, p.max_gens), rk(1, p.max_rank);
  std::uniform_int_distribution<std::uint32_t> dg(1, p.max_degree);
  Instance in;
  in.space.domain = dom;
  const std::size_t r = nv(rng);
  const char* names[] = {"x", "y", "z", "w"};
  for (std::size_t i = 0; i < r; ++i) in.space.vars.push_back(names[i]);
  in.space.order = random_order(r, rng);
  in.space.rank = rk(rng);
  in.grading = Grading::standard(r, in.space.rank);
  const std::size_t k = ng(rng);
  for (std::size_t i = 0; i < k; ++i) {
    if (p.homogeneous)
      in.gens.push_back(random_elem(in.space, rng, p.max_terms, p.max_degree, p.coeff_range, dg(rng)));
    else
      in.gens.push_back(random_elem(in.space, rng, p.max_terms, p.max_degree, p.coeff_range));
  }
  return in;
}

FreeElem random_combination(const FreeModule& F, const std::vector<FreeElem>& gens, Rng& rng, std::size_t terms,
                            std::uint32_t max_degree, long range) {
  FreeElem acc;
  const FreeModule R = F.ring();
  for (const auto& g : gens) {
    FreeElem f = random_elem(R, rng, terms, max_degree, range);
    acc = add(F, acc, mul_poly(F, f, g));
  }
  return acc;
}

Instance homogenize_standard(const Instance& in) {
  Instance out = in;
  out.space.vars.push_back("h");
  const std::size_t r = in.space.nvars();
  if (!out.space.order.perm.empty()) out.space.order.perm.push_back(r);
  if (out.space.order.weights) out.space.order.weights->push_back(1);
  out.grading = Grading::standard(r + 1, in.space.rank);
  out.gens.clear();
  for (const auto& g : in.gens) {
    std::int64_t top = 0;
    for (const auto& t : g.terms) top = std::max(top, t.mono.total_degree());
    std::vector<Term> ts;
    for (const auto& t : g.terms) {
      Monomial m = t.mono;
      m.exps.push_back(static_cast<std::uint32_t>(top - t.mono.total_degree()));
      ts.push_back(Term{t.coeff, std::move(m), t.basis});
    }
    out.gens.push_back(make_elem(out.space, std::move(ts)));
  }
  return out;
}

std::vector<CoeffDomain> fuzz_domains() {
  return {CoeffDomain::integers(), CoeffDomain::prime_field(5), CoeffDomain::poly_over_prime_field(2)};
}

}  // namespace gfree::testing
