#pragma once

// Exact arithmetic over the supported Euclidean coefficient domains:
//   ZZ, QQ, GF(p), GF(p)[t], QQ[t]
// Elements are plain values (RingElem); every operation goes through the
// CoeffDomain that owns them, in the style of a context object.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gfree {

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense univariate polynomial over GF(p), lowest degree first, no trailing zeros.
struct FpPoly {
  std::vector<std::uint64_t> c;
  bool operator==(const FpPoly&) const = default;
};

/// Dense univariate polynomial over QQ, lowest degree first, no trailing zeros.
struct QPoly {
  std::vector<mpq_class> c;
  bool operator==(const QPoly& o) const;
};

/// A coefficient value. Which alternative is active is dictated by the
/// domain kind; a mismatch is reported as a DomainError by the domain.
class RingElem {
 public:
  using Payload = std::variant<mpz_class, mpq_class, std::uint64_t, FpPoly, QPoly>;

  RingElem() : v_(mpz_class(0)) {}
  explicit RingElem(Payload v) : v_(std::move(v)) {}

  const Payload& payload() const { return v_; }
  Payload& payload() { return v_; }

  bool operator==(const RingElem& o) const;

 private:
  Payload v_;
};

enum class DomainKind { Integers, Rationals, PrimeField, PolyOverPrimeField, PolyOverRationals };

struct ExtGcd {
  RingElem g, u, v;  // g = u*x + v*y
};

struct StripResult {
  RingElem core;
  unsigned k = 0;  // number of gcd extractions performed
};

class CoeffDomain {
 public:
  static CoeffDomain integers();
  static CoeffDomain rationals();
  static CoeffDomain prime_field(std::uint64_t p);
  static CoeffDomain poly_over_prime_field(std::uint64_t p, std::string var = "t");
  static CoeffDomain poly_over_rationals(std::string var = "t");

  DomainKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  const std::string& var() const { return var_; }
  bool is_field() const { return kind_ == DomainKind::Rationals || kind_ == DomainKind::PrimeField; }
  bool is_polynomial() const {
    return kind_ == DomainKind::PolyOverPrimeField || kind_ == DomainKind::PolyOverRationals;
  }
  /// True when the domain contains a field (everything except ZZ).
  bool contains_field() const { return kind_ != DomainKind::Integers; }

  /// "ZZ", "QQ", "GF(5)", "GF(2)[t]", "QQ[t]"
  std::string name() const;

  bool operator==(const CoeffDomain&) const = default;

  // Construction
  RingElem zero() const;
  RingElem one() const;
  RingElem from_int(long v) const;
  RingElem from_mpz(const mpz_class& v) const;
  /// Fails for ZZ and GF(p) when the denominator is not invertible.
  RingElem from_mpq(const mpq_class& v) const;
  /// The coefficient variable t itself (polynomial domains only).
  RingElem gen() const;
  /// Polynomial domains: build from coefficients listed lowest degree first.
  RingElem from_coeffs(const std::vector<mpq_class>& coeffs) const;

  // Predicates
  bool is_zero(const RingElem& x) const;
  bool is_one(const RingElem& x) const;
  bool is_unit(const RingElem& x) const;
  bool equal(const RingElem& x, const RingElem& y) const;
  /// True iff x and y differ by a unit factor.
  bool associate(const RingElem& x, const RingElem& y) const;
  bool owns(const RingElem& x) const;

  // Ring operations
  RingElem add(const RingElem& x, const RingElem& y) const;
  RingElem sub(const RingElem& x, const RingElem& y) const;
  RingElem neg(const RingElem& x) const;
  RingElem mul(const RingElem& x, const RingElem& y) const;
  RingElem pow(const RingElem& x, std::uint64_t e) const;

  // Euclidean structure
  /// Euclidean division x = q*y + r. ZZ uses floor division (0 <= r < |y|).
  std::pair<RingElem, RingElem> div_rem(const RingElem& x, const RingElem& y) const;
  bool divides(const RingElem& d, const RingElem& x) const;
  /// x / d, throws if d does not divide x.
  RingElem div_exact(const RingElem& x, const RingElem& d) const;
  ExtGcd ext_gcd(const RingElem& x, const RingElem& y) const;
  RingElem gcd(const RingElem& x, const RingElem& y) const;
  RingElem lcm(const RingElem& x, const RingElem& y) const;
  /// Inverse of a unit.
  RingElem inverse(const RingElem& x) const;

  // Normalization: positive in ZZ, monic in k[t], 1 in fields.
  /// The unit u with u*x normalized (1 for x = 0).
  RingElem normal_unit(const RingElem& x) const;
  RingElem normalize(const RingElem& x) const;

  /// Splits x = core * d where d divides a power of `a` and gcd(core, a) is a unit.
  StripResult strip_witness(const RingElem& x, const RingElem& a) const;
  RingElem core(const RingElem& x, const RingElem& a) const { return strip_witness(x, a).core; }

  /// Deterministic total order used to pick "smallest" coefficients.
  /// Compares a size measure first (|x| in ZZ, degree in k[t]).
  std::strong_ordering size_compare(const RingElem& x, const RingElem& y) const;

  /// x^q for q a power of the characteristic (GF(p), GF(p)[t] only).
  RingElem frobenius(const RingElem& x, std::uint64_t q) const;

  // Specialization helpers
  /// Value of a polynomial coefficient at t = s (s given in the base field).
  RingElem evaluate(const RingElem& x, const RingElem& s, const CoeffDomain& base) const;
  /// The base field of a polynomial domain.
  CoeffDomain base_field() const;
  /// Image of x under the map ZZ -> GF(q) (ZZ only).
  RingElem reduce_mod(const RingElem& x, const CoeffDomain& target) const;

  /// Coefficient rendering. Polynomial values are braced: {t^2+1}.
  std::string to_string(const RingElem& x) const;
  /// True if to_string(x) begins with a minus sign that can be hoisted.
  bool is_negative(const RingElem& x) const;

 private:
  CoeffDomain(DomainKind k, std::uint64_t p, std::string var) : kind_(k), p_(p), var_(std::move(var)) {}
  void check(const RingElem& x) const;

  DomainKind kind_ = DomainKind::Integers;
  std::uint64_t p_ = 0;
  std::string var_;
};

bool is_prime(std::uint64_t n);

/// An element of the localization A_a, stored as numerator / a^apower.
struct LocalizedElem {
  RingElem numerator;
  unsigned apower = 0;
};

/// Arithmetic in A_a for a fixed nonzero witness a.
class Localization {
 public:
  Localization(CoeffDomain dom, RingElem a);

  const CoeffDomain& domain() const { return dom_; }
  const RingElem& witness() const { return a_; }

  /// Canonical form: divide the numerator by a while apower > 0 and a | numerator.
  LocalizedElem make(RingElem numerator, unsigned apower = 0) const;
  LocalizedElem add(const LocalizedElem& x, const LocalizedElem& y) const;
  LocalizedElem mul(const LocalizedElem& x, const LocalizedElem& y) const;
  bool equal(const LocalizedElem& x, const LocalizedElem& y) const;
  bool is_unit(const LocalizedElem& x) const;
  /// d | x in A_a, decided on cores in A.
  bool divides(const LocalizedElem& d, const LocalizedElem& x) const;
  std::string to_string(const LocalizedElem& x) const;

 private:
  CoeffDomain dom_;
  RingElem a_;
};

}  // namespace gfree
