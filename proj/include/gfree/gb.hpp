#pragma once

// Weak Groebner bases for submodules of F = R^rank over a Euclidean
// coefficient domain A. A generating set is a Groebner basis when the leading
// terms (coefficient included) generate the initial module in(M) as an
// R-module; in(M) is generated by terms, not necessarily by monomials.
//
// Completion uses pairwise term syzygies only. Over a PID this is enough:
// a term syzygy splits by monomial into coefficient syzygies of the leading
// coefficients sharing that monomial, and the kernel of (c_1, ..., c_s) is
// generated by the pairwise vectors (c_j/g) e_i - (c_i/g) e_j.

#include "gfree/parallel.hpp"
#include "gfree/poly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gfree {

class FuelExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroebnerBasis {
  FreeModule space;
  std::vector<FreeElem> gens;
  std::vector<Term> initial_terms;
  bool certified = false;
};

/// scale * input = sum_j quotients[j] * gens[j] + remainder.
/// scale is 1 unless the reduction ran over a localization A_a, where it is
/// a divisor of a power of a (a unit in A_a).
struct ReductionTrace {
  std::vector<std::pair<std::size_t, FreeElem>> quotients;
  FreeElem remainder;
  RingElem scale;
};

struct ReduceOptions {
  bool record_trace = false;
  /// Decide coefficient membership in A_a instead of A.
  std::optional<RingElem> localize;
};

/// Full weak reduction: no term of the remainder lies in the submodule
/// generated by the leading terms of `gens`.
ReductionTrace reduce(const FreeModule& F, const FreeElem& w, std::span<const FreeElem> gens,
                      const ReduceOptions& opts = {});
ReductionTrace reduce(const FreeElem& w, const GroebnerBasis& G, const ReduceOptions& opts = {});
FreeElem normal_form(const FreeModule& F, const FreeElem& w, std::span<const FreeElem> gens,
                     const ReduceOptions& opts = {});

/// Re-expands a trace and checks the identity and in(f_i w_i) <= in(w).
bool verify_trace(const FreeModule& F, const FreeElem& w, std::span<const FreeElem> gens,
                  const ReductionTrace& trace);

/// h_i * in(w_i) + h_j * in(w_j) = 0 with h_i, h_j terms of R (basis 0).
struct TermSyzygy {
  std::size_t i = 0, j = 0;
  Term hi, hj;
};

/// One syzygy per pair i < j of terms on the same basis vector.
std::vector<TermSyzygy> term_syzygies(const FreeModule& F, std::span<const Term> terms);
/// h_i * w_i + h_j * w_j.
FreeElem s_vector(const FreeModule& F, std::span<const FreeElem> gens, const TermSyzygy& syz);

struct BuchbergerOptions {
  /// Maximum number of pair reductions before FuelExhausted.
  std::uint64_t fuel = 1'000'000;
  Exec exec = Exec::Serial;
  bool interreduce = true;
  /// Run is_groebner on the result and set `certified`.
  bool certify = true;
};

/// Weak Groebner basis of the submodule generated by `gens`. Pairs follow the
/// normal strategy (smallest lcm term first, ties by index). The final pass
/// adds gcd combinations of leading terms, drops redundant generators,
/// tail-reduces and unit-normalizes.
GroebnerBasis buchberger(const FreeModule& F, std::vector<FreeElem> gens, const BuchbergerOptions& opts = {});

struct GroebnerCheck {
  bool ok = true;
  /// First failing syzygy in pair order, if any.
  std::optional<TermSyzygy> failing;
  FreeElem residue;
  std::size_t pairs_checked = 0;
};

/// Buchberger criterion: every pairwise S-vector reduces to zero.
/// Exec::Parallel reduces the S-vectors concurrently.
GroebnerCheck check_groebner(const FreeModule& F, std::span<const FreeElem> gens, Exec exec = Exec::Serial,
                             const std::optional<RingElem>& localize = std::nullopt);
bool is_groebner(const FreeModule& F, std::span<const FreeElem> gens);

/// Wraps a candidate generating set; `certified` reflects check_groebner.
GroebnerBasis certify(const FreeModule& F, std::vector<FreeElem> gens, Exec exec = Exec::Serial,
                      const std::optional<RingElem>& localize = std::nullopt);

/// Leading terms of a certified basis, deduplicated.
std::vector<Term> initial_module(const GroebnerBasis& G);

/// Removes generators whose leading term lies in the module generated by the
/// other leading terms, keeping a deterministic survivor.
std::vector<Term> minimal_terms(const FreeModule& F, std::vector<Term> terms);

/// Is c*mono*e_basis in the submodule generated by `terms`?
bool term_in_module(const FreeModule& F, const Term& t, std::span<const Term> terms,
                    const std::optional<RingElem>& localize = std::nullopt);

}  // namespace gfree
