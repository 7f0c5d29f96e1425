#pragma once

// Characteristic p: Frobenius powers of submodules and the square-free
// initial ideal hypothesis that makes local cohomology generically free.

#include "gfree/freeness.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gfree {

/// Termwise p^e-th powers: (sum c x^n e_k)^[q] = sum c^q x^(qn) e_k.
/// Throws DomainError in characteristic zero.
std::vector<FreeElem> frobenius_power(const FreeModule& F, const std::vector<FreeElem>& gens, unsigned e);

struct FrobeniusReport {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::vector<Term> initial_of_power;
  std::vector<Term> power_of_initial;
  /// Every term of one side lies in the A_a-term module of the other.
  bool power_in_initial = false;
  bool initial_in_power = false;
  bool equal_after_localization = false;
  Witness witness_used;
};

/// Fresh Groebner basis of the Frobenius powers of G's generators, compared
/// with the powers of G's leading terms after inverting the witness of G.
FrobeniusReport frobenius_initial_check(const GroebnerBasis& G, unsigned e, const BuchbergerOptions& bopts = {});

struct SquarefreeReport {
  bool squarefree = false;
  std::vector<Monomial> offending;
  Witness witness;
  bool contains_field = false;
  /// Free-text conclusion: reported, never computed.
  std::string conclusion;
};

/// Ideal case only (rank 1) with homogeneous generators for `g`.
SquarefreeReport squarefree_report(const GroebnerBasis& G, const Grading& g);

}  // namespace gfree
