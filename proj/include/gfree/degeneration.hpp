#pragma once

// One-parameter flat family joining M (at t = 1) and in(M) (at t = 0).
// A positive weight vector omega and decreasing basis shifts d make every
// generator's leading term its unique term of top (omega, d)-degree; padding
// the other terms with powers of a new variable t homogenizes the basis.

#include "gfree/freeness.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gfree {

struct DegenerationData {
  std::vector<std::int64_t> omega;
  std::vector<std::int64_t> shifts;
  /// F[t]: the source variables followed by t, ordered by (omega, d)-degree
  /// and then by the source order with t ignored.
  FreeModule extended;
  std::size_t t_index = 0;
  std::vector<FreeElem> homogenized;
  GroebnerBasis source;
};

/// Positive integer omega with omega.n > omega.m for every pair of monomials
/// x^n > x^m on a common basis vector inside one generator. Exact rational
/// LP (Bland's rule), scaled to coprime integers; a small box search is
/// the fallback. Throws std::logic_error if no weight is found.
std::vector<std::int64_t> weight_vector(const GroebnerBasis& G);

/// Largest spread of omega-degrees among the terms of one generator.
std::int64_t weight_spread(const GroebnerBasis& G, const std::vector<std::int64_t>& omega);

/// d_k = (rank - k + 1) * (B + 1) for k = 1..rank.
std::vector<std::int64_t> shift_vector(const GroebnerBasis& G, const std::vector<std::int64_t>& omega);

std::int64_t weighted_degree(const Term& t, const std::vector<std::int64_t>& omega,
                             const std::vector<std::int64_t>& shifts);

/// Multiplies every term by t^(top degree - its degree). Throws
/// std::invalid_argument if the leading term is not the unique term of top
/// degree in some generator.
DegenerationData homogenize(const GroebnerBasis& G, const std::vector<std::int64_t>& omega,
                            const std::vector<std::int64_t>& shifts);
/// weight_vector, shift_vector and homogenize in one call.
DegenerationData degenerate(const GroebnerBasis& G);

/// Elements of F obtained by setting t to 0 or 1.
std::vector<FreeElem> at_t_zero(const DegenerationData& D);
std::vector<FreeElem> at_t_one(const DegenerationData& D);

struct DegenerationReport {
  bool homogeneous = true;
  std::optional<std::size_t> not_homogeneous;
  /// t = 0 recovers the initial terms.
  bool special_ok = true;
  std::optional<std::size_t> special_failing;
  /// t = 1 recovers the source generators.
  bool general_ok = true;
  std::optional<std::size_t> general_failing;

  /// Graded ranks over a residue field avoiding the witness: the initial
  /// module (t = 0) against the first difference of the Hilbert function of
  /// F[t]/E (t = 1 side, with t a non-zero-divisor).
  bool fibers_checked = false;
  /// Empty when no rational point avoids the witness; the generic fiber is used then.
  std::optional<Point> point;
  RingElem witness;
  HilbertTable special_table, general_table;
  std::vector<std::int64_t> differing_degrees;

  bool ok() const { return homogeneous && special_ok && general_ok && differing_degrees.empty(); }
};

/// Runs (a), (b) and, when `bound` is set, (c) over (omega, d)-degrees
/// 0 .. max(d) + bound.
DegenerationReport degeneration_check(const DegenerationData& D, std::optional<std::int64_t> bound = 4,
                                      const BuchbergerOptions& bopts = {});

}  // namespace gfree
