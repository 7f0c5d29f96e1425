#pragma once

// Generic freeness: once the witness a (lcm of the leading coefficients of a
// Groebner basis) is inverted, the initial module becomes monomial and F/M
// is free over A_a on the standard monomials. Graded pieces are then free of
// the ranks counted here, and every fiber over a point where a survives has
// the same Hilbert function.

#include "gfree/gb.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace gfree {

struct Witness {
  RingElem value;
  /// (leading coefficient, source generator index)
  std::vector<std::pair<RingElem, std::size_t>> factors;
};

/// a = lcm of the leading coefficients. With `refine`, each leading
/// coefficient is first replaced by the gcd of all leading coefficients whose
/// monomial divides its own (same basis vector), which can only shrink a.
Witness witness(const GroebnerBasis& G, bool refine = false);

struct StandardMonomial {
  Monomial mono;
  std::size_t basis = 0;
  std::int64_t degree = 0;
};

/// Monomials x^n e_k of graded degree <= bound outside the monomial module
/// spanned by the initial terms. Throws DomainError if some initial
/// coefficient is not a unit in A_a. Sorted by degree, then by the order
/// (largest first).
std::vector<StandardMonomial> standard_monomials(const FreeModule& F, const std::vector<Term>& initials,
                                                 const Witness& a, std::int64_t bound, const Grading& g);

struct HilbertTable {
  Grading grading;
  std::int64_t lo = 0;
  std::vector<std::int64_t> ranks;  // ranks[k] is the rank in degree lo + k

  std::int64_t hi() const { return lo + static_cast<std::int64_t>(ranks.size()) - 1; }
  std::int64_t at(std::int64_t nu) const;
  bool operator==(const HilbertTable& o) const { return lo == o.lo && ranks == o.ranks; }
};

/// Number of standard monomials in each degree of [lo, hi], computed from
/// the Hilbert series numerator of each basis component's monomial ideal.
/// Coefficients of `initials` are ignored (assumed units after localization).
HilbertTable hilbert_function(const FreeModule& F, const std::vector<Term>& initials, const Grading& g,
                              std::int64_t lo, std::int64_t hi);
/// Reference implementation: enumerate every monomial and test divisibility.
HilbertTable hilbert_function_bruteforce(const FreeModule& F, const std::vector<Term>& initials, const Grading& g,
                                         std::int64_t lo, std::int64_t hi);

/// Hilbert series numerator of R/(monomials) for positive weights, lowest
/// degree first.
std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, const std::vector<std::int64_t>& weights);

/// A point of Spec A with residue field kappa: a prime q for ZZ, a scalar
/// t -> s for k[t], ignored for fields.
struct Point {
  mpq_class value;
  bool operator==(const Point& o) const { return value == o.value; }
};
std::string to_string(const Point& p);

CoeffDomain residue_field(const CoeffDomain& A, const Point& p);
RingElem specialize_coeff(const CoeffDomain& A, const RingElem& c, const CoeffDomain& kappa, const Point& p);
bool kills(const CoeffDomain& A, const RingElem& a, const Point& p);

struct Specialization {
  FreeModule space;
  std::vector<FreeElem> gens;
  /// Indices of input generators whose image is zero (dropped).
  std::vector<std::size_t> vanished;
};

Specialization specialize(const FreeModule& F, const std::vector<FreeElem>& gens, const Point& p);

/// Deterministic points avoiding the witness: smallest primes not dividing a
/// for ZZ, smallest scalars with a(s) != 0 for k[t], a single point for fields.
std::vector<Point> default_points(const CoeffDomain& A, const RingElem& a, std::size_t count = 3);

struct FiberResult {
  Point point;
  bool kills_witness = false;
  std::vector<std::size_t> vanished;
  HilbertTable table;
  bool equal = false;
  std::vector<std::int64_t> differing_degrees;
};

struct FiberReport {
  GroebnerBasis generic_basis;
  Witness witness;
  HilbertTable generic;
  std::vector<FiberResult> fibers;
  /// Every point avoiding the witness reproduced the generic table.
  bool consistent = true;
};

/// Field Groebner basis and Hilbert table per point, compared with the
/// standard-monomial table of the generic basis. Requires homogeneous
/// generators. Exec::Parallel runs the fibers concurrently.
FiberReport fiber_compare(const FreeModule& F, const std::vector<FreeElem>& gens, const std::vector<Point>& points,
                          std::int64_t lo, std::int64_t hi, const Grading& g, Exec exec = Exec::Serial,
                          const BuchbergerOptions& bopts = {});

/// Table of a single fiber (or of A itself when it is a field).
HilbertTable fiber_table(const FreeModule& F, const std::vector<FreeElem>& gens, std::int64_t lo, std::int64_t hi,
                         const Grading& g, const BuchbergerOptions& bopts = {});

}  // namespace gfree
