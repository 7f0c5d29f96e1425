#include "gfree/gb.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace gfree {

namespace {

/// g = sum_k u[k] * cs[k], g unit-normalized.
struct Combination {
  RingElem g;
  std::vector<RingElem> u;
};

Combination bezout_cascade(const CoeffDomain& dom, const std::vector<RingElem>& cs) {
  Combination out{cs.front(), {dom.one()}};
  for (std::size_t k = 1; k < cs.size(); ++k) {
    ExtGcd e = dom.ext_gcd(out.g, cs[k]);
    for (auto& x : out.u) x = dom.mul(x, e.u);
    out.u.push_back(e.v);
    out.g = e.g;
  }
  if (cs.size() == 1) {
    RingElem n = dom.normal_unit(out.g);
    out.g = dom.mul(n, out.g);
    out.u[0] = n;
  }
  return out;
}

// q with c - q*g of least size; over ZZ the remainder lies in (-|g|/2, |g|/2].
RingElem centered_quotient(const CoeffDomain& dom, const RingElem& c, const RingElem& g) {
  auto [q, r] = dom.div_rem(c, g);
  if (dom.kind() == DomainKind::Integers) {
    const mpz_class& rz = std::get<mpz_class>(r.payload());
    mpz_class gz = abs(std::get<mpz_class>(g.payload()));
    if (2 * rz > gz) {
      mpz_class& qz = std::get<mpz_class>(q.payload());
      qz += sgn(std::get<mpz_class>(g.payload()));
    }
  }
  return q;
}

FreeElem monomial_elem(const RingElem& c, const Monomial& m) { return FreeElem{{Term{c, m, 0}}}; }

std::vector<std::size_t> applicable(const std::vector<const Term*>& leads, const Term& t) {
  std::vector<std::size_t> J;
  for (std::size_t j = 0; j < leads.size(); ++j)
    if (leads[j]->basis == t.basis && mono_divides(leads[j]->mono, t.mono)) J.push_back(j);
  return J;
}

std::vector<const Term*> lead_ptrs(std::span<const FreeElem> gens) {
  std::vector<const Term*> leads;
  leads.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    leads.push_back(&g.lead());
  }
  return leads;
}

}  // namespace

ReductionTrace reduce(const FreeModule& F, const FreeElem& w, std::span<const FreeElem> gens,
                      const ReduceOptions& opts) {
  const auto& dom = F.domain;
  const FreeModule R = F.ring();
  const auto leads = lead_ptrs(gens);

  FreeElem h = w;
  FreeElem rem;
  std::vector<FreeElem> quot(opts.record_trace ? gens.size() : 0);
  RingElem total_scale = dom.one();

  auto subtract = [&](std::size_t j, const RingElem& q, const Term& lt) {
    Monomial m = mono_div(lt.mono, leads[j]->mono);
    h = sub_mul_term(F, h, q, m, gens[j]);
    if (opts.record_trace) quot[j] = add(R, quot[j], monomial_elem(q, m));
  };

  while (!h.is_zero()) {
    const Term lt = h.terms.front();
    const auto J = applicable(leads, lt);
    bool reduced = false;
    if (!J.empty()) {
      for (auto j : J) {
        if (dom.divides(leads[j]->coeff, lt.coeff)) {
          subtract(j, dom.div_exact(lt.coeff, leads[j]->coeff), lt);
          reduced = true;
          break;
        }
      }
      if (!reduced && (J.size() > 1 || opts.localize)) {
        std::vector<RingElem> cs;
        for (auto j : J) cs.push_back(leads[j]->coeff);
        Combination comb = bezout_cascade(dom, cs);
        RingElem c = lt.coeff;
        bool member = false;
        if (!opts.localize) {
          member = dom.divides(comb.g, c);
        } else {
          RingElem core_g = dom.core(comb.g, *opts.localize);
          if (dom.divides(core_g, c)) {
            member = true;
            // Multiply everything by the a-part of g, a unit in A_a.
            RingElem d = dom.div_exact(comb.g, core_g);
            if (!dom.is_one(d)) {
              h = scale(F, h, d);
              rem = scale(F, rem, d);
              for (auto& q : quot) q = scale(R, q, d);
              total_scale = dom.mul(total_scale, d);
              c = dom.mul(c, d);
            }
          }
        }
        if (member) {
          RingElem q = dom.div_exact(c, comb.g);
          Term cur{c, lt.mono, lt.basis};
          for (std::size_t k = 0; k < J.size(); ++k) {
            RingElem mult = dom.mul(q, comb.u[k]);
            if (!dom.is_zero(mult)) subtract(J[k], mult, cur);
          }
          reduced = true;
        }
      }
      if (!reduced && !opts.localize) {
        // Not a member: shrink the coefficient modulo the gcd so tails stay small.
        std::vector<RingElem> cs;
        for (auto j : J) cs.push_back(leads[j]->coeff);
        Combination comb = bezout_cascade(dom, cs);
        RingElem q = centered_quotient(dom, lt.coeff, comb.g);
        if (!dom.is_zero(q)) {
          for (std::size_t k = 0; k < J.size(); ++k) {
            RingElem mult = dom.mul(q, comb.u[k]);
            if (!dom.is_zero(mult)) subtract(J[k], mult, lt);
          }
          continue;
        }
      }
    }
    if (!reduced) {
      rem.terms.push_back(lt);
      h.terms.erase(h.terms.begin());
    }
  }

  ReductionTrace out;
  out.remainder = std::move(rem);
  out.scale = std::move(total_scale);
  for (std::size_t j = 0; j < quot.size(); ++j)
    if (!quot[j].is_zero()) out.quotients.emplace_back(j, std::move(quot[j]));
  return out;
}

ReductionTrace reduce(const FreeElem& w, const GroebnerBasis& G, const ReduceOptions& opts) {
  return reduce(G.space, w, G.gens, opts);
}

FreeElem normal_form(const FreeModule& F, const FreeElem& w, std::span<const FreeElem> gens,
                     const ReduceOptions& opts) {
  ReduceOptions o = opts;
  o.record_trace = false;
  return reduce(F, w, gens, o).remainder;
}

bool verify_trace(const FreeModule& F, const FreeElem& w, std::span<const FreeElem> gens,
                  const ReductionTrace& trace) {
  FreeElem sum = trace.remainder;
  for (const auto& [j, q] : trace.quotients) {
    if (j >= gens.size()) return false;
    if (!w.is_zero()) {
      Term lq = q.lead();
      Term lg = gens[j].lead();
      Monomial m = mono_mul(lq.mono, lg.mono);
      if (F.order.compare(m, lg.basis, w.lead().mono, w.lead().basis) > 0) return false;
    }
    sum = add(F, sum, mul_poly(F, q, gens[j]));
  }
  return equal(F, sum, scale(F, w, trace.scale));
}

std::vector<TermSyzygy> term_syzygies(const FreeModule& F, std::span<const Term> terms) {
  const auto& dom = F.domain;
  for (const auto& t : terms)
    if (dom.is_zero(t.coeff)) throw std::invalid_argument("zero term in syzygy computation");
  std::vector<TermSyzygy> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (terms[i].basis != terms[j].basis) continue;
      RingElem g = dom.gcd(terms[i].coeff, terms[j].coeff);
      Monomial L = mono_lcm(terms[i].mono, terms[j].mono);
      out.push_back(TermSyzygy{i, j, Term{dom.div_exact(terms[j].coeff, g), mono_div(L, terms[i].mono), 0},
                               Term{dom.neg(dom.div_exact(terms[i].coeff, g)), mono_div(L, terms[j].mono), 0}});
    }
  }
  return out;
}

FreeElem s_vector(const FreeModule& F, std::span<const FreeElem> gens, const TermSyzygy& syz) {
  FreeElem a = mul_term(F, gens[syz.i], syz.hi.coeff, syz.hi.mono);
  return sub_mul_term(F, a, F.domain.neg(syz.hj.coeff), syz.hj.mono, gens[syz.j]);
}

bool term_in_module(const FreeModule& F, const Term& t, std::span<const Term> terms,
                    const std::optional<RingElem>& localize) {
  const auto& dom = F.domain;
  RingElem g = dom.zero();
  bool any = false;
  for (const auto& s : terms) {
    if (s.basis != t.basis || !mono_divides(s.mono, t.mono)) continue;
    g = any ? dom.gcd(g, s.coeff) : dom.normalize(s.coeff);
    any = true;
  }
  if (!any) return false;
  if (localize) return dom.divides(dom.core(g, *localize), t.coeff);
  return dom.divides(g, t.coeff);
}

namespace {

bool lead_before(const FreeModule& F, const Term& a, const Term& b) {
  auto c = F.order.compare(a, b);
  if (c != 0) return c < 0;
  return F.domain.size_compare(a.coeff, b.coeff) < 0;
}

}  // namespace

std::vector<Term> minimal_terms(const FreeModule& F, std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return lead_before(F, a, b); });
  std::vector<Term> kept;
  for (auto& t : terms)
    if (!term_in_module(F, t, kept)) kept.push_back(std::move(t));
  return kept;
}

namespace {

std::vector<FreeElem> finalize(const FreeModule& F, std::vector<FreeElem> G) {
  const auto& dom = F.domain;

  // Leading-coefficient gcd combinations: if the leading coefficients whose
  // monomials divide m_i generate a strictly larger ideal than (c_i), add the
  // element realizing the gcd at m_i.
  {
    std::vector<FreeElem> extra;
    std::vector<std::pair<Monomial, std::size_t>> seen;
    const std::size_t n = G.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Term& li = G[i].lead();
      if (std::find(seen.begin(), seen.end(), std::make_pair(li.mono, li.basis)) != seen.end()) continue;
      seen.emplace_back(li.mono, li.basis);
      std::vector<std::size_t> J;
      std::vector<RingElem> cs;
      for (std::size_t j = 0; j < n; ++j) {
        const Term& lj = G[j].lead();
        if (lj.basis == li.basis && mono_divides(lj.mono, li.mono)) {
          J.push_back(j);
          cs.push_back(lj.coeff);
        }
      }
      Combination comb = bezout_cascade(dom, cs);
      bool present = false;
      for (auto j : J)
        if (G[j].lead().mono == li.mono && dom.associate(G[j].lead().coeff, comb.g)) present = true;
      if (present) continue;
      FreeElem e;
      for (std::size_t k = 0; k < J.size(); ++k) {
        if (dom.is_zero(comb.u[k])) continue;
        e = add(F, e, mul_term(F, G[J[k]], comb.u[k], mono_div(li.mono, G[J[k]].lead().mono)));
      }
      extra.push_back(unit_normalize(F, e));
    }
    for (auto& e : extra) G.push_back(std::move(e));
  }

  // Drop generators whose leading term is generated by the survivors.
  std::vector<std::size_t> idx(G.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return lead_before(F, G[a].lead(), G[b].lead()); });
  std::vector<FreeElem> kept;
  std::vector<Term> kept_leads;
  for (auto i : idx) {
    if (term_in_module(F, G[i].lead(), kept_leads)) continue;
    kept_leads.push_back(G[i].lead());
    kept.push_back(std::move(G[i]));
  }

  // Tail reduction against the other survivors.
  for (std::size_t k = 0; k < kept.size(); ++k) {
    std::vector<FreeElem> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != k) others.push_back(kept[j]);
    FreeElem tail;
    tail.terms.assign(kept[k].terms.begin() + 1, kept[k].terms.end());
    if (tail.is_zero() || others.empty()) continue;
    FreeElem nf = normal_form(F, tail, others);
    FreeElem g;
    g.terms.push_back(kept[k].terms.front());
    g.terms.insert(g.terms.end(), nf.terms.begin(), nf.terms.end());
    kept[k] = std::move(g);
  }

  for (auto& g : kept) g = unit_normalize(F, g);
  std::stable_sort(kept.begin(), kept.end(),
                   [&](const FreeElem& a, const FreeElem& b) { return lead_before(F, b.lead(), a.lead()); });
  return kept;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::size_t basis;
};

}  // namespace

GroebnerBasis buchberger(const FreeModule& F, std::vector<FreeElem> gens, const BuchbergerOptions& opts) {
  F.validate();
  const auto& dom = F.domain;
  GroebnerBasis out;
  out.space = F;

  std::vector<FreeElem> G;
  for (auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    FreeElem n = unit_normalize(F, g);
    bool dup = std::any_of(G.begin(), G.end(), [&](const FreeElem& x) { return equal(F, x, n); });
    if (!dup) G.push_back(std::move(n));
  }

  auto cmp = [&F](const Pair& a, const Pair& b) {
    auto c = F.order.compare(a.lcm, a.basis, b.lcm, b.basis);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(cmp)> pairs(cmp);
  // An element whose leading term is a multiple of a later one stops forming
  // new pairs; those are implied by the pairs with the later element.
  std::vector<char> active;
  auto add_pairs_for = [&](std::size_t k) {
    const Term& lk = G[k].lead();
    active.resize(G.size(), 1);
    for (std::size_t i = 0; i < k; ++i) {
      if (!active[i]) continue;
      const Term& li = G[i].lead();
      if (li.basis != lk.basis) continue;
      pairs.insert(Pair{i, k, mono_lcm(li.mono, lk.mono), lk.basis});
      if (mono_divides(lk.mono, li.mono) && dom.divides(lk.coeff, li.coeff)) active[i] = 0;
    }
  };
  for (std::size_t k = 0; k < G.size(); ++k) add_pairs_for(k);

  auto insert = [&](const FreeElem& v) {
    FreeElem r = normal_form(F, v, G);
    if (r.is_zero()) return;
    G.push_back(unit_normalize(F, r));
    add_pairs_for(G.size() - 1);
  };

  auto s_of = [&](const Pair& p) {
    std::vector<Term> two{G[p.i].lead(), G[p.j].lead()};
    TermSyzygy syz = term_syzygies(F, two).front();
    syz.i = p.i;
    syz.j = p.j;
    return s_vector(F, G, syz);
  };

  // Bezout combination with leading coefficient gcd(c_i, c_j), when neither
  // coefficient divides the other. Not needed for correctness, but it keeps
  // chains of ever smaller coefficients from growing the basis one step at a time.
  auto g_of = [&](const Pair& p) -> std::optional<FreeElem> {
    const Term& a = G[p.i].lead();
    const Term& b = G[p.j].lead();
    if (dom.divides(a.coeff, b.coeff) || dom.divides(b.coeff, a.coeff)) return std::nullopt;
    ExtGcd e = dom.ext_gcd(a.coeff, b.coeff);
    FreeElem x = mul_term(F, G[p.i], e.u, mono_div(p.lcm, a.mono));
    return add(F, x, mul_term(F, G[p.j], e.v, mono_div(p.lcm, b.mono)));
  };

  std::uint64_t used = 0;
  constexpr std::size_t kBatch = 8;
  while (!pairs.empty()) {
    if (opts.exec == Exec::Serial) {
      Pair p = *pairs.begin();
      pairs.erase(pairs.begin());
      if (++used > opts.fuel) throw FuelExhausted("Buchberger fuel exhausted after " + std::to_string(opts.fuel) + " pair reductions");
      auto gv = g_of(p);
      insert(s_of(p));
      if (gv) insert(*gv);
      continue;
    }
    // Parallel: reduce a fixed-size batch of the smallest pairs against the
    // current basis, then insert survivors sorted by leading term, each
    // re-reduced against the insertions before it.
    std::vector<Pair> batch;
    while (!pairs.empty() && batch.size() < kBatch) {
      batch.push_back(*pairs.begin());
      pairs.erase(pairs.begin());
    }
    used += batch.size();
    if (used > opts.fuel) throw FuelExhausted("Buchberger fuel exhausted after " + std::to_string(opts.fuel) + " pair reductions");
    std::vector<FreeElem> rs(2 * batch.size());
    for_each_index(Exec::Parallel, batch.size(), [&](std::size_t b) {
      rs[2 * b] = normal_form(F, s_of(batch[b]), G);
      if (auto gv = g_of(batch[b])) rs[2 * b + 1] = normal_form(F, *gv, G);
    });
    std::erase_if(rs, [](const FreeElem& r) { return r.is_zero(); });
    std::stable_sort(rs.begin(), rs.end(),
                     [&](const FreeElem& a, const FreeElem& b) { return lead_before(F, b.lead(), a.lead()); });
    for (auto& r : rs) insert(r);
  }

  out.gens = opts.interreduce && !G.empty() ? finalize(F, std::move(G)) : std::move(G);
  for (const auto& g : out.gens) out.initial_terms.push_back(g.lead());
  out.certified = opts.certify ? check_groebner(F, out.gens, opts.exec).ok : false;
  return out;
}

GroebnerCheck check_groebner(const FreeModule& F, std::span<const FreeElem> gens, Exec exec,
                             const std::optional<RingElem>& localize) {
  const auto leads_p = lead_ptrs(gens);
  std::vector<Term> leads;
  for (auto* t : leads_p) leads.push_back(*t);
  const auto syz = term_syzygies(F, leads);
  ReduceOptions ro;
  ro.localize = localize;

  GroebnerCheck out;
  if (exec == Exec::Serial) {
    for (const auto& s : syz) {
      ++out.pairs_checked;
      FreeElem nf = normal_form(F, s_vector(F, gens, s), gens, ro);
      if (!nf.is_zero()) {
        out.ok = false;
        out.failing = s;
        out.residue = std::move(nf);
        return out;
      }
    }
    return out;
  }
  std::vector<FreeElem> residues(syz.size());
  for_each_index(Exec::Parallel, syz.size(),
                 [&](std::size_t k) { residues[k] = normal_form(F, s_vector(F, gens, syz[k]), gens, ro); });
  for (std::size_t k = 0; k < syz.size(); ++k) {
    ++out.pairs_checked;
    if (!residues[k].is_zero()) {
      out.ok = false;
      out.failing = syz[k];
      out.residue = std::move(residues[k]);
      break;
    }
  }
  return out;
}

bool is_groebner(const FreeModule& F, std::span<const FreeElem> gens) { return check_groebner(F, gens).ok; }

GroebnerBasis certify(const FreeModule& F, std::vector<FreeElem> gens, Exec exec,
                      const std::optional<RingElem>& localize) {
  GroebnerBasis G;
  G.space = F;
  G.gens = std::move(gens);
  for (const auto& g : G.gens) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    G.initial_terms.push_back(g.lead());
  }
  G.certified = check_groebner(F, G.gens, exec, localize).ok;
  return G;
}

std::vector<Term> initial_module(const GroebnerBasis& G) {
  if (!G.certified) throw std::invalid_argument("initial module requested for an uncertified basis");
  std::vector<Term> out;
  for (const auto& g : G.gens) {
    const Term& t = g.lead();
    bool dup = std::any_of(out.begin(), out.end(), [&](const Term& s) {
      return s.basis == t.basis && s.mono == t.mono && G.space.domain.equal(s.coeff, t.coeff);
    });
    if (!dup) out.push_back(t);
  }
  return out;
}

}  // namespace gfree
