#include "gfree/detgen.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gfree {

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> s(k);
  std::iota(s.begin(), s.end(), 0);
  for (;;) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

void check_dims(std::size_t m, std::size_t n, std::size_t t) {
  if (!(1 <= t && t <= m && m <= n)) throw std::invalid_argument("need 1 <= t <= m <= n");
}

bool exempt(std::size_t i, std::size_t j, std::size_t m, std::size_t n, std::size_t t, bool sharp) {
  const std::size_t s = i + j, low = sharp ? t : t - 1;
  return s <= low || s + t >= m + n + 2;
}

FreeElem minor(const DetInstance& inst, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  const auto& dom = inst.space.domain;
  const std::size_t t = rows.size();
  std::vector<std::size_t> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term> terms;
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < t; ++a)
      for (std::size_t b = a + 1; b < t; ++b)
        if (perm[a] > perm[b]) ++inversions;
    RingElem c = inversions % 2 ? dom.neg(dom.one()) : dom.one();
    Monomial mono(inst.space.nvars());
    for (std::size_t k = 0; k < t; ++k) {
      c = dom.mul(c, inst.coeffs[rows[k]][cols[perm[k]]]);
      ++mono.exps[inst.var(rows[k], cols[perm[k]])];
    }
    terms.push_back(Term{std::move(c), std::move(mono), 0});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return make_elem(inst.space, std::move(terms));
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> antidiagonal_complement(std::size_t m, std::size_t n, std::size_t t,
                                                                         bool sharp) {
  check_dims(m, n, t);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (exempt(i, j, m, n, t, sharp)) out.emplace_back(i, j);
  return out;
}

DetInstance make_instance(const CoeffDomain& A, std::size_t m, std::size_t n, std::size_t t,
                          std::vector<std::vector<RingElem>> coeffs, bool sharp) {
  check_dims(m, n, t);
  if (coeffs.size() != m) throw std::invalid_argument("coefficient matrix has the wrong number of rows");
  for (std::size_t i = 0; i < m; ++i) {
    if (coeffs[i].size() != n) throw std::invalid_argument("coefficient matrix row " + std::to_string(i + 1) + " has the wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (!A.owns(coeffs[i][j])) throw DomainError("coefficient does not belong to " + A.name());
      if (A.is_zero(coeffs[i][j]))
        throw std::invalid_argument("coefficient a" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + " is zero");
    }
  }
  DetInstance inst;
  inst.m = m;
  inst.n = n;
  inst.t = t;
  inst.coeffs = std::move(coeffs);
  inst.sharp = sharp;
  inst.space.domain = A;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) inst.space.vars.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  inst.space.order = OrderSpec::lex(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = n; j-- > 0;) inst.space.order.perm.push_back(inst.var(i, j));
  inst.space.rank = 1;
  inst.space.validate();
  return inst;
}

DetInstance unit_instance(const CoeffDomain& A, std::size_t m, std::size_t n, std::size_t t) {
  return make_instance(A, m, n, t, std::vector<std::vector<RingElem>>(m, std::vector<RingElem>(n, A.one())));
}

Term antidiagonal_term(const DetInstance& inst, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
  const auto& dom = inst.space.domain;
  const std::size_t t = rows.size();
  RingElem c = (t * (t - 1) / 2) % 2 ? dom.neg(dom.one()) : dom.one();
  Monomial mono(inst.space.nvars());
  for (std::size_t k = 0; k < t; ++k) {
    c = dom.mul(c, inst.coeffs[rows[k]][cols[t - 1 - k]]);
    ++mono.exps[inst.var(rows[k], cols[t - 1 - k])];
  }
  return Term{std::move(c), std::move(mono), 0};
}

std::vector<FreeElem> build_minors(const DetInstance& inst, Exec exec) {
  const auto R = subsets(inst.m, inst.t), C = subsets(inst.n, inst.t);
  std::vector<FreeElem> out(R.size() * C.size());
  for_each_index(exec, out.size(), [&](std::size_t k) {
    const auto& rows = R[k / C.size()];
    const auto& cols = C[k % C.size()];
    out[k] = minor(inst, rows, cols);
    Term expect = antidiagonal_term(inst, rows, cols);
    const Term& lt = out[k].lead();
    if (!(lt.mono == expect.mono) || !inst.space.domain.equal(lt.coeff, expect.coeff))
      throw std::logic_error("minor " + std::to_string(k + 1) + " does not lead with its antidiagonal");
  });
  return out;
}

Witness det_witness(const DetInstance& inst) {
  const auto& dom = inst.space.domain;
  Witness w{dom.one(), {}};
  for (std::size_t i = 0; i < inst.m; ++i)
    for (std::size_t j = 0; j < inst.n; ++j) {
      if (exempt(i + 1, j + 1, inst.m, inst.n, inst.t, inst.sharp)) continue;
      const RingElem& a = inst.coeffs[i][j];
      w.factors.emplace_back(a, inst.var(i, j));
      w.value = dom.lcm(w.value, a);
    }
  w.value = dom.normalize(w.value);
  return w;
}

DetReport verify_instance(const DetInstance& inst, const std::vector<FreeElem>& minors, std::int64_t bound,
                          std::vector<Point> points, Exec exec, const BuchbergerOptions& bopts) {
  const FreeModule& F = inst.space;
  const auto& dom = F.domain;
  DetReport rep;
  rep.witness = det_witness(inst);

  std::optional<RingElem> loc;
  if (!dom.is_unit(rep.witness.value)) loc = rep.witness.value;
  rep.check = check_groebner(F, minors, exec, loc);
  rep.certified = rep.check.ok;
  if (!rep.certified) {
    GroebnerBasis full = buchberger(F, minors, bopts);
    for (const auto& g : full.gens)
      if (std::none_of(minors.begin(), minors.end(), [&](const FreeElem& w) { return equal(F, w, g) || equal(F, neg(F, w), g); }))
        ++rep.additions;
  }

  GroebnerBasis G;
  G.space = F;
  G.gens = minors;
  for (const auto& w : minors) G.initial_terms.push_back(w.lead());
  G.certified = rep.certified;
  const Grading grading = Grading::standard(F.nvars());
  rep.sqfree = squarefree_report(G, grading);

  DetInstance ones = unit_instance(dom, inst.m, inst.n, inst.t);
  std::vector<Term> generic_initials;
  for (const auto& w : build_minors(ones)) generic_initials.push_back(w.lead());
  rep.generic = hilbert_function(F, generic_initials, grading, 0, bound);

  if (points.empty()) points = default_points(dom, rep.witness.value);
  rep.fibers.resize(points.size());
  for_each_index(exec, points.size(), [&](std::size_t k) {
    FiberResult& r = rep.fibers[k];
    r.point = points[k];
    r.kills_witness = kills(dom, rep.witness.value, points[k]);
    Specialization s = specialize(F, minors, points[k]);
    r.vanished = s.vanished;
    r.table = fiber_table(s.space, s.gens, 0, bound, grading, bopts);
    for (std::int64_t nu = 0; nu <= bound; ++nu)
      if (r.table.at(nu) != rep.generic.at(nu)) r.differing_degrees.push_back(nu);
    r.equal = r.differing_degrees.empty();
  });
  for (const auto& r : rep.fibers)
    if (!r.kills_witness && !r.equal) rep.fibers_consistent = false;

  rep.pass = rep.certified && rep.sqfree.squarefree && rep.fibers_consistent;
  return rep;
}

}  // namespace gfree
