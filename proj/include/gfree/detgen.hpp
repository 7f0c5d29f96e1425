#pragma once

// t-minors of the m x n matrix (a_ij x_ij) under the antidiagonal lex order,
// in which every minor's leading term is the product along its antidiagonal.

#include "gfree/charp.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gfree {

struct DetInstance {
  std::size_t m = 0, n = 0, t = 0;
  /// coeffs[i][j] is a_{i+1, j+1}; all nonzero.
  std::vector<std::vector<RingElem>> coeffs;
  /// R = A[x_ij], variables row-major, lex with x_1n > ... > x_11 > x_2n > ...
  FreeModule space;
  /// Use {i+j <= t} instead of {i+j <= t-1} for the exempt positions.
  bool sharp = false;

  std::size_t var(std::size_t i, std::size_t j) const { return i * n + j; }
};

/// Exempt positions (1-based), sorted. Formula: i+j <= t-1 or
/// i+j >= m+n-t+2; with `sharp`, i+j <= t or i+j >= m+n-t+2.
std::vector<std::pair<std::size_t, std::size_t>> antidiagonal_complement(std::size_t m, std::size_t n, std::size_t t,
                                                                         bool sharp = false);

DetInstance make_instance(const CoeffDomain& A, std::size_t m, std::size_t n, std::size_t t,
                          std::vector<std::vector<RingElem>> coeffs, bool sharp = false);
DetInstance unit_instance(const CoeffDomain& A, std::size_t m, std::size_t n, std::size_t t);

/// All C(m,t) C(n,t) minors, row subsets outer and column subsets inner,
/// both in lexicographic order. Throws std::logic_error if a minor's leading
/// term is not its antidiagonal term.
std::vector<FreeElem> build_minors(const DetInstance& inst, Exec exec = Exec::Serial);

/// The antidiagonal term of the minor on rows R and columns C.
Term antidiagonal_term(const DetInstance& inst, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols);

/// lcm of a_ij over positions outside the exempt set.
Witness det_witness(const DetInstance& inst);

struct DetReport {
  Witness witness;
  GroebnerCheck check;
  bool certified = false;
  /// Generators the completion had to add when certification failed.
  std::size_t additions = 0;
  SquarefreeReport sqfree;
  HilbertTable generic;
  std::vector<FiberResult> fibers;
  bool fibers_consistent = true;
  bool pass = false;
};

/// Certifies the minors over A_a, checks the initial ideal is square-free
/// and compares fibers with the all-ones instance's Hilbert table in
/// degrees 0..bound. Empty `points` selects default_points.
DetReport verify_instance(const DetInstance& inst, const std::vector<FreeElem>& minors, std::int64_t bound,
                          std::vector<Point> points = {}, Exec exec = Exec::Serial,
                          const BuchbergerOptions& bopts = {});

}  // namespace gfree
