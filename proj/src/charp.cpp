#include "gfree/charp.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfree {

namespace {

std::uint64_t frobenius_q(const CoeffDomain& dom, unsigned e) {
  if (dom.kind() != DomainKind::PrimeField && dom.kind() != DomainKind::PolyOverPrimeField)
    throw DomainError("Frobenius powers need positive characteristic, got " + dom.name());
  std::uint64_t q = 1;
  for (unsigned k = 0; k < e; ++k) {
    if (q > (std::uint64_t{1} << 31) / dom.characteristic()) throw std::overflow_error("Frobenius exponent too large");
    q *= dom.characteristic();
  }
  return q;
}

Term power_term(const CoeffDomain& dom, const Term& t, std::uint64_t q) {
  return Term{dom.frobenius(t.coeff, q), mono_pow(t.mono, q), t.basis};
}

bool all_in(const FreeModule& F, const std::vector<Term>& xs, const std::vector<Term>& ys, const RingElem& a) {
  return std::all_of(xs.begin(), xs.end(), [&](const Term& t) { return term_in_module(F, t, ys, a); });
}

}  // namespace

std::vector<FreeElem> frobenius_power(const FreeModule& F, const std::vector<FreeElem>& gens, unsigned e) {
  const std::uint64_t q = frobenius_q(F.domain, e);
  std::vector<FreeElem> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<Term> terms;
    terms.reserve(g.terms.size());
    for (const auto& t : g.terms) terms.push_back(power_term(F.domain, t, q));
    FreeElem w = make_elem(F, std::move(terms));
    if (!g.is_zero()) {
      const Term& lt = w.lead();
      Term expect = power_term(F.domain, g.lead(), q);
      if (lt.basis != expect.basis || !(lt.mono == expect.mono))
        throw std::logic_error("Frobenius power moved the leading monomial");
    }
    out.push_back(std::move(w));
  }
  return out;
}

FrobeniusReport frobenius_initial_check(const GroebnerBasis& G, unsigned e, const BuchbergerOptions& bopts) {
  const FreeModule& F = G.space;
  FrobeniusReport rep;
  const std::uint64_t q = frobenius_q(F.domain, e);
  rep.p = F.domain.characteristic();
  rep.e = e;
  rep.witness_used = witness(G);

  auto powers = frobenius_power(F, G.gens, e);
  if (!powers.empty()) rep.initial_of_power = buchberger(F, powers, bopts).initial_terms;
  for (const auto& t : G.initial_terms) rep.power_of_initial.push_back(power_term(F.domain, t, q));

  const RingElem& a = rep.witness_used.value;
  rep.power_in_initial = all_in(F, rep.initial_of_power, rep.power_of_initial, a);
  rep.initial_in_power = all_in(F, rep.power_of_initial, rep.initial_of_power, a);
  rep.equal_after_localization = rep.power_in_initial && rep.initial_in_power;
  return rep;
}

SquarefreeReport squarefree_report(const GroebnerBasis& G, const Grading& g) {
  const FreeModule& F = G.space;
  if (F.rank != 1) throw std::invalid_argument("square-free report needs an ideal (module rank 1)");
  g.validate(F.nvars(), F.rank);
  for (std::size_t i = 0; i < G.gens.size(); ++i)
    if (!is_homogeneous(G.gens[i], g))
      throw std::invalid_argument("generator " + std::to_string(i + 1) + " is not homogeneous for the grading");

  SquarefreeReport rep;
  rep.witness = witness(G);
  rep.contains_field = F.domain.contains_field();
  for (const auto& t : G.initial_terms)
    if (!t.mono.is_squarefree() && std::find(rep.offending.begin(), rep.offending.end(), t.mono) == rep.offending.end())
      rep.offending.push_back(t.mono);
  std::sort(rep.offending.begin(), rep.offending.end(),
            [&](const Monomial& a, const Monomial& b) { return F.order.compare_monomials(a, b) > 0; });
  rep.squarefree = rep.offending.empty();

  const std::string loc = "after inverting a = " + F.domain.to_string(rep.witness.value);
  if (!rep.squarefree)
    rep.conclusion = "initial ideal is not square-free; no conclusion";
  else if (!rep.contains_field)
    rep.conclusion = "initial ideal is square-free, but " + F.domain.name() +
                     " contains no field; the local cohomology freeness statement does not apply";
  else
    rep.conclusion = "initial ideal is square-free; every local cohomology module of R/I at the irrelevant ideal "
                     "is free " + loc + " (reported, not computed)";
  return rep;
}

}  // namespace gfree
