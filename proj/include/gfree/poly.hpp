#pragma once

#include "gfree/coeff.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gfree {

/// Exponent vector x^n. Exponents are 32-bit; products are overflow-checked.
struct Monomial {
  std::vector<std::uint32_t> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

  std::size_t size() const { return exps.size(); }
  bool is_one() const;
  std::int64_t total_degree() const;
  bool is_squarefree() const;
  bool operator==(const Monomial&) const = default;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
/// a | b
bool mono_divides(const Monomial& a, const Monomial& b);
/// b / a, requires a | b.
Monomial mono_div(const Monomial& b, const Monomial& a);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
Monomial mono_pow(const Monomial& a, std::uint64_t e);

/// coeff * mono * e_{basis}. Basis indices are 0-based internally and
/// rendered 1-based (e1, e2, ...).
struct Term {
  RingElem coeff;
  Monomial mono;
  std::size_t basis = 0;
};

enum class BaseOrder { Lex, GrLex, GrevLex };

/// Monomial order on R extended position-over-term to F = R^rank, with
/// e_1 > e_2 > ... . Optional weight refinement compares omega . n first.
/// When `shifts` is non-empty the comparison of terms starts with the
/// shifted weighted degree omega . n + shifts[basis] (a graded module order),
/// and position-over-term breaks ties.
struct OrderSpec {
  BaseOrder base = BaseOrder::GrevLex;
  /// perm[0] is the largest variable. Empty means identity.
  std::vector<std::size_t> perm;
  std::optional<std::vector<std::int64_t>> weights;
  std::vector<std::int64_t> shifts;
  /// Degree weights compared before anything else (and used with `shifts`).
  /// Empty means `weights` plays this role for the shifted degree.
  std::vector<std::int64_t> grade_weights;
  /// Variable ignored by the base tie-break (the homogenizing variable of a
  /// degeneration). Only valid together with a positive weight on it.
  std::optional<std::size_t> tiebreak_skip;

  bool operator==(const OrderSpec&) const = default;

  static OrderSpec lex(std::size_t nvars);
  static OrderSpec grlex(std::size_t nvars);
  static OrderSpec grevlex(std::size_t nvars);

  /// Throws std::invalid_argument when inconsistent with nvars.
  void validate(std::size_t nvars) const;

  std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) const;
  std::strong_ordering compare(const Monomial& a, std::size_t ia, const Monomial& b, std::size_t ib) const;
  std::strong_ordering compare(const Term& s, const Term& t) const { return compare(s.mono, s.basis, t.mono, t.basis); }

 private:
  std::strong_ordering compare_base(const Monomial& a, const Monomial& b) const;
  std::size_t var_at(std::size_t k) const { return perm.empty() ? k : perm[k]; }
};

/// Positive variable weights plus per-basis shifts.
struct Grading {
  std::vector<std::int64_t> var_weights;
  std::vector<std::int64_t> basis_shifts;

  static Grading standard(std::size_t nvars, std::size_t rank = 1);
  void validate(std::size_t nvars, std::size_t rank) const;
  std::int64_t degree(const Monomial& m, std::size_t basis) const;
  bool operator==(const Grading&) const = default;
};

/// Element of F, terms strictly decreasing under the ambient order.
struct FreeElem {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const;
};

/// The ambient free module F = R^rank over R = A[vars], with its order.
/// Every polynomial routine takes this context explicitly.
struct FreeModule {
  CoeffDomain domain = CoeffDomain::integers();
  std::vector<std::string> vars;
  OrderSpec order;
  std::size_t rank = 1;

  std::size_t nvars() const { return vars.size(); }
  /// Same space with rank 1: the ring R itself.
  FreeModule ring() const;
  void validate() const;
};

std::strong_ordering compare(const FreeModule& F, const Term& s, const Term& t);

/// Sorts, combines like terms, drops zeros.
FreeElem make_elem(const FreeModule& F, std::vector<Term> terms);
FreeElem add(const FreeModule& F, const FreeElem& a, const FreeElem& b);
FreeElem sub(const FreeModule& F, const FreeElem& a, const FreeElem& b);
FreeElem neg(const FreeModule& F, const FreeElem& a);
FreeElem scale(const FreeModule& F, const FreeElem& a, const RingElem& c);
/// (c * mono) * a; order-preserving.
FreeElem mul_term(const FreeModule& F, const FreeElem& a, const RingElem& c, const Monomial& mono);
/// a - (c * mono) * b, fused.
FreeElem sub_mul_term(const FreeModule& F, const FreeElem& a, const RingElem& c, const Monomial& mono,
                      const FreeElem& b);
/// f * w with f in R (stored as a rank-1 element on basis 0).
FreeElem mul_poly(const FreeModule& F, const FreeElem& f, const FreeElem& w);
bool equal(const FreeModule& F, const FreeElem& a, const FreeElem& b);

/// Greatest term under the order; throws std::invalid_argument for zero.
Term leading_term(const FreeModule& F, const FreeElem& w);
/// Recomputes the order (used when the ambient order changes).
FreeElem resort(const FreeModule& F, FreeElem w);
/// Multiplies by the unit making the leading coefficient normalized.
FreeElem unit_normalize(const FreeModule& F, const FreeElem& w);

std::int64_t graded_degree(const Term& t, const Grading& g);
bool is_homogeneous(const FreeElem& w, const Grading& g);

Term term_mul(const FreeModule& F, const Term& a, const Term& b);

std::string to_string(const FreeModule& F, const Monomial& m);
std::string to_string(const FreeModule& F, const Term& t);
std::string to_string(const FreeModule& F, const FreeElem& w);

}  // namespace gfree
