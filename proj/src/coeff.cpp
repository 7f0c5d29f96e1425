#include "gfree/coeff.hpp"

#include <algorithm>
#include <sstream>

namespace gfree {

namespace {

// ---------------------------------------------------------------------------
// GF(p) scalars. p < 2^32, so products of reduced values fit in 64 bits.

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("division by zero in GF(" + std::to_string(p) + ")");
  return mod_pow(a, p - 2, p);
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials, parameterized by the scalar field.

struct FpField {
  std::uint64_t p;
  using S = std::uint64_t;
  S zero() const { return 0; }
  S one() const { return 1; }
  bool is_zero(const S& a) const { return a == 0; }
  S add(const S& a, const S& b) const { return mod_add(a, b, p); }
  S sub(const S& a, const S& b) const { return mod_sub(a, b, p); }
  S mul(const S& a, const S& b) const { return mod_mul(a, b, p); }
  S inv(const S& a) const { return mod_inv(a, p); }
};

struct QField {
  using S = mpq_class;
  S zero() const { return 0; }
  S one() const { return 1; }
  bool is_zero(const S& a) const { return sgn(a) == 0; }
  S add(const S& a, const S& b) const { return a + b; }
  S sub(const S& a, const S& b) const { return a - b; }
  S mul(const S& a, const S& b) const { return a * b; }
  S inv(const S& a) const {
    if (sgn(a) == 0) throw DomainError("division by zero in QQ");
    return 1 / a;
  }
};

template <class Fd>
using Coeffs = std::vector<typename Fd::S>;

template <class Fd>
void trim(const Fd& f, Coeffs<Fd>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class Fd>
Coeffs<Fd> padd(const Fd& f, const Coeffs<Fd>& a, const Coeffs<Fd>& b) {
  Coeffs<Fd> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(f, r);
  return r;
}

template <class Fd>
Coeffs<Fd> psub(const Fd& f, const Coeffs<Fd>& a, const Coeffs<Fd>& b) {
  Coeffs<Fd> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(f, r);
  return r;
}

template <class Fd>
Coeffs<Fd> pmul(const Fd& f, const Coeffs<Fd>& a, const Coeffs<Fd>& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs<Fd> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(f, r);
  return r;
}

template <class Fd>
Coeffs<Fd> pscale(const Fd& f, const Coeffs<Fd>& a, const typename Fd::S& s) {
  Coeffs<Fd> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], s);
  trim(f, r);
  return r;
}

template <class Fd>
std::pair<Coeffs<Fd>, Coeffs<Fd>> pdivrem(const Fd& f, const Coeffs<Fd>& a, const Coeffs<Fd>& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  Coeffs<Fd> q, r = a;
  if (a.size() < b.size()) return {q, r};
  q.assign(a.size() - b.size() + 1, f.zero());
  auto lc_inv = f.inv(b.back());
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    auto c = f.mul(r.back(), lc_inv);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = f.sub(r[shift + j], f.mul(c, b[j]));
    trim(f, r);
  }
  trim(f, q);
  return {q, r};
}

const mpz_class& as_z(const RingElem& x) { return std::get<mpz_class>(x.payload()); }
const mpq_class& as_q(const RingElem& x) { return std::get<mpq_class>(x.payload()); }
std::uint64_t as_fp(const RingElem& x) { return std::get<std::uint64_t>(x.payload()); }
const FpPoly& as_fpp(const RingElem& x) { return std::get<FpPoly>(x.payload()); }
const QPoly& as_qp(const RingElem& x) { return std::get<QPoly>(x.payload()); }

RingElem mk(mpz_class v) { return RingElem(RingElem::Payload(std::move(v))); }
RingElem mk(mpq_class v) {
  v.canonicalize();
  return RingElem(RingElem::Payload(std::move(v)));
}
RingElem mk_fp(std::uint64_t v) { return RingElem(RingElem::Payload(v)); }
RingElem mk(std::vector<std::uint64_t> c) { return RingElem(RingElem::Payload(FpPoly{std::move(c)})); }
RingElem mk(std::vector<mpq_class> c) { return RingElem(RingElem::Payload(QPoly{std::move(c)})); }

template <class S>
std::string poly_to_string(const std::vector<S>& c, const std::string& var) {
  if (c.empty()) return "{0}";
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    const S& a = c[k];
    bool negative = false;
    std::string mag;
    if constexpr (std::is_same_v<S, mpq_class>) {
      if (sgn(a) == 0) continue;
      negative = sgn(a) < 0;
      mpq_class m = abs(a);
      mag = m.get_str();
    } else {
      if (a == 0) continue;
      mag = std::to_string(a);
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit_mag = (mag == "1");
    if (k == 0) {
      os << mag;
    } else {
      if (!unit_mag) os << mag << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  os << '}';
  return os.str();
}

}  // namespace

bool QPoly::operator==(const QPoly& o) const {
  if (c.size() != o.c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != o.c[i]) return false;
  return true;
}

bool RingElem::operator==(const RingElem& o) const {
  if (v_.index() != o.v_.index()) return false;
  return std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        const auto& b = std::get<T>(o.v_);
        if constexpr (std::is_same_v<T, mpz_class> || std::is_same_v<T, mpq_class>)
          return cmp(a, b) == 0;
        else
          return a == b;
      },
      v_);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoeffDomain CoeffDomain::integers() { return {DomainKind::Integers, 0, ""}; }
CoeffDomain CoeffDomain::rationals() { return {DomainKind::Rationals, 0, ""}; }
CoeffDomain CoeffDomain::prime_field(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) throw DomainError("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
  return {DomainKind::PrimeField, p, ""};
}
CoeffDomain CoeffDomain::poly_over_prime_field(std::uint64_t p, std::string var) {
  if (p >= (1ULL << 31) || !is_prime(p)) throw DomainError("GF(p)[t] requires a prime p < 2^31, got " + std::to_string(p));
  return {DomainKind::PolyOverPrimeField, p, std::move(var)};
}
CoeffDomain CoeffDomain::poly_over_rationals(std::string var) { return {DomainKind::PolyOverRationals, 0, std::move(var)}; }

std::string CoeffDomain::name() const {
  switch (kind_) {
    case DomainKind::Integers: return "ZZ";
    case DomainKind::Rationals: return "QQ";
    case DomainKind::PrimeField: return "GF(" + std::to_string(p_) + ")";
    case DomainKind::PolyOverPrimeField: return "GF(" + std::to_string(p_) + ")[" + var_ + "]";
    case DomainKind::PolyOverRationals: return "QQ[" + var_ + "]";
  }
  return "?";
}

bool CoeffDomain::owns(const RingElem& x) const {
  switch (kind_) {
    case DomainKind::Integers: return std::holds_alternative<mpz_class>(x.payload());
    case DomainKind::Rationals: return std::holds_alternative<mpq_class>(x.payload());
    case DomainKind::PrimeField: return std::holds_alternative<std::uint64_t>(x.payload());
    case DomainKind::PolyOverPrimeField: return std::holds_alternative<FpPoly>(x.payload());
    case DomainKind::PolyOverRationals: return std::holds_alternative<QPoly>(x.payload());
  }
  return false;
}

void CoeffDomain::check(const RingElem& x) const {
  if (!owns(x)) throw DomainError("coefficient does not belong to " + name());
}

RingElem CoeffDomain::zero() const { return from_int(0); }
RingElem CoeffDomain::one() const { return from_int(1); }

RingElem CoeffDomain::from_int(long v) const { return from_mpz(mpz_class(v)); }

RingElem CoeffDomain::from_mpz(const mpz_class& v) const {
  switch (kind_) {
    case DomainKind::Integers: return mk(v);
    case DomainKind::Rationals: return mk(mpq_class(v));
    case DomainKind::PrimeField: {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
      return mk_fp(r.get_ui());
    }
    case DomainKind::PolyOverPrimeField: {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
      if (r == 0) return mk(std::vector<std::uint64_t>{});
      return mk(std::vector<std::uint64_t>{r.get_ui()});
    }
    case DomainKind::PolyOverRationals:
      if (v == 0) return mk(std::vector<mpq_class>{});
      return mk(std::vector<mpq_class>{mpq_class(v)});
  }
  throw DomainError("unreachable");
}

RingElem CoeffDomain::from_mpq(const mpq_class& v0) const {
  mpq_class v = v0;
  v.canonicalize();
  switch (kind_) {
    case DomainKind::Integers:
      if (v.get_den() != 1) throw DomainError("non-integer literal " + v.get_str() + " in ZZ");
      return mk(mpz_class(v.get_num()));
    case DomainKind::Rationals: return mk(v);
    case DomainKind::PolyOverRationals: return from_coeffs({v});
    case DomainKind::PrimeField:
    case DomainKind::PolyOverPrimeField: {
      RingElem n = from_mpz(v.get_num());
      RingElem d = from_mpz(v.get_den());
      if (is_zero(d)) throw DomainError("denominator vanishes in " + name());
      return mul(n, inverse(d));
    }
  }
  throw DomainError("unreachable");
}

RingElem CoeffDomain::gen() const {
  if (kind_ == DomainKind::PolyOverPrimeField) return mk(std::vector<std::uint64_t>{0, 1});
  if (kind_ == DomainKind::PolyOverRationals) return mk(std::vector<mpq_class>{0, 1});
  throw DomainError(name() + " has no coefficient variable");
}

RingElem CoeffDomain::from_coeffs(const std::vector<mpq_class>& coeffs) const {
  if (kind_ == DomainKind::PolyOverRationals) {
    std::vector<mpq_class> c(coeffs);
    for (auto& x : c) x.canonicalize();
    QField f;
    trim(f, c);
    return mk(std::move(c));
  }
  if (kind_ == DomainKind::PolyOverPrimeField) {
    CoeffDomain base = prime_field(p_);
    std::vector<std::uint64_t> c;
    for (const auto& q : coeffs) c.push_back(as_fp(base.from_mpq(q)));
    FpField f{p_};
    trim(f, c);
    return mk(std::move(c));
  }
  throw DomainError(name() + " is not a polynomial domain");
}

bool CoeffDomain::is_zero(const RingElem& x) const {
  check(x);
  switch (kind_) {
    case DomainKind::Integers: return sgn(as_z(x)) == 0;
    case DomainKind::Rationals: return sgn(as_q(x)) == 0;
    case DomainKind::PrimeField: return as_fp(x) == 0;
    case DomainKind::PolyOverPrimeField: return as_fpp(x).c.empty();
    case DomainKind::PolyOverRationals: return as_qp(x).c.empty();
  }
  return false;
}

bool CoeffDomain::is_one(const RingElem& x) const { return equal(x, one()); }

bool CoeffDomain::is_unit(const RingElem& x) const {
  check(x);
  switch (kind_) {
    case DomainKind::Integers: return mpz_cmpabs_ui(as_z(x).get_mpz_t(), 1) == 0;
    case DomainKind::Rationals:
    case DomainKind::PrimeField: return !is_zero(x);
    case DomainKind::PolyOverPrimeField: return as_fpp(x).c.size() == 1;
    case DomainKind::PolyOverRationals: return as_qp(x).c.size() == 1;
  }
  return false;
}

bool CoeffDomain::equal(const RingElem& x, const RingElem& y) const {
  check(x);
  check(y);
  return x == y;
}

bool CoeffDomain::associate(const RingElem& x, const RingElem& y) const { return equal(normalize(x), normalize(y)); }

RingElem CoeffDomain::add(const RingElem& x, const RingElem& y) const {
  check(x);
  check(y);
  switch (kind_) {
    case DomainKind::Integers: return mk(mpz_class(as_z(x) + as_z(y)));
    case DomainKind::Rationals: return mk(mpq_class(as_q(x) + as_q(y)));
    case DomainKind::PrimeField: return mk_fp(mod_add(as_fp(x), as_fp(y), p_));
    case DomainKind::PolyOverPrimeField: return mk(padd(FpField{p_}, as_fpp(x).c, as_fpp(y).c));
    case DomainKind::PolyOverRationals: return mk(padd(QField{}, as_qp(x).c, as_qp(y).c));
  }
  throw DomainError("unreachable");
}

RingElem CoeffDomain::sub(const RingElem& x, const RingElem& y) const {
  check(x);
  check(y);
  switch (kind_) {
    case DomainKind::Integers: return mk(mpz_class(as_z(x) - as_z(y)));
    case DomainKind::Rationals: return mk(mpq_class(as_q(x) - as_q(y)));
    case DomainKind::PrimeField: return mk_fp(mod_sub(as_fp(x), as_fp(y), p_));
    case DomainKind::PolyOverPrimeField: return mk(psub(FpField{p_}, as_fpp(x).c, as_fpp(y).c));
    case DomainKind::PolyOverRationals: return mk(psub(QField{}, as_qp(x).c, as_qp(y).c));
  }
  throw DomainError("unreachable");
}

RingElem CoeffDomain::neg(const RingElem& x) const { return sub(zero(), x); }

RingElem CoeffDomain::mul(const RingElem& x, const RingElem& y) const {
  check(x);
  check(y);
  switch (kind_) {
    case DomainKind::Integers: return mk(mpz_class(as_z(x) * as_z(y)));
    case DomainKind::Rationals: return mk(mpq_class(as_q(x) * as_q(y)));
    case DomainKind::PrimeField: return mk_fp(mod_mul(as_fp(x), as_fp(y), p_));
    case DomainKind::PolyOverPrimeField: return mk(pmul(FpField{p_}, as_fpp(x).c, as_fpp(y).c));
    case DomainKind::PolyOverRationals: return mk(pmul(QField{}, as_qp(x).c, as_qp(y).c));
  }
  throw DomainError("unreachable");
}

RingElem CoeffDomain::pow(const RingElem& x, std::uint64_t e) const {
  RingElem r = one(), b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

std::pair<RingElem, RingElem> CoeffDomain::div_rem(const RingElem& x, const RingElem& y) const {
  check(x);
  check(y);
  if (is_zero(y)) throw DomainError("division by zero in " + name());
  switch (kind_) {
    case DomainKind::Integers: {
      mpz_class ay = abs(as_z(y)), r, q;
      mpz_fdiv_r(r.get_mpz_t(), as_z(x).get_mpz_t(), ay.get_mpz_t());
      q = (as_z(x) - r) / as_z(y);
      return {mk(q), mk(r)};
    }
    case DomainKind::Rationals:
    case DomainKind::PrimeField: return {mul(x, inverse(y)), zero()};
    case DomainKind::PolyOverPrimeField: {
      auto [q, r] = pdivrem(FpField{p_}, as_fpp(x).c, as_fpp(y).c);
      return {mk(std::move(q)), mk(std::move(r))};
    }
    case DomainKind::PolyOverRationals: {
      auto [q, r] = pdivrem(QField{}, as_qp(x).c, as_qp(y).c);
      return {mk(std::move(q)), mk(std::move(r))};
    }
  }
  throw DomainError("unreachable");
}

bool CoeffDomain::divides(const RingElem& d, const RingElem& x) const {
  check(d);
  check(x);
  if (is_zero(d)) return is_zero(x);
  if (kind_ == DomainKind::Integers) return mpz_divisible_p(as_z(x).get_mpz_t(), as_z(d).get_mpz_t()) != 0;
  if (is_field()) return true;
  return is_zero(div_rem(x, d).second);
}

RingElem CoeffDomain::div_exact(const RingElem& x, const RingElem& d) const {
  if (kind_ == DomainKind::Integers) {
    check(x);
    check(d);
    if (sgn(as_z(d)) == 0 || !mpz_divisible_p(as_z(x).get_mpz_t(), as_z(d).get_mpz_t()))
      throw DomainError("inexact division " + to_string(x) + " / " + to_string(d));
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), as_z(x).get_mpz_t(), as_z(d).get_mpz_t());
    return mk(q);
  }
  auto [q, r] = div_rem(x, d);
  if (!is_zero(r)) throw DomainError("inexact division " + to_string(x) + " / " + to_string(d));
  return q;
}

RingElem CoeffDomain::inverse(const RingElem& x) const {
  check(x);
  switch (kind_) {
    case DomainKind::Integers:
      if (!is_unit(x)) throw DomainError(to_string(x) + " is not a unit in ZZ");
      return x;
    case DomainKind::Rationals:
      if (sgn(as_q(x)) == 0) throw DomainError("division by zero in QQ");
      return mk(mpq_class(1 / as_q(x)));
    case DomainKind::PrimeField: return mk_fp(mod_inv(as_fp(x), p_));
    case DomainKind::PolyOverPrimeField:
      if (!is_unit(x)) throw DomainError(to_string(x) + " is not a unit in " + name());
      return mk(std::vector<std::uint64_t>{mod_inv(as_fpp(x).c[0], p_)});
    case DomainKind::PolyOverRationals:
      if (!is_unit(x)) throw DomainError(to_string(x) + " is not a unit in " + name());
      return mk(std::vector<mpq_class>{mpq_class(1 / as_qp(x).c[0])});
  }
  throw DomainError("unreachable");
}

ExtGcd CoeffDomain::ext_gcd(const RingElem& x, const RingElem& y) const {
  check(x);
  check(y);
  if (is_zero(x) && is_zero(y)) throw DomainError("ext_gcd of two zeros");
  RingElem old_r = x, r = y;
  RingElem old_s = one(), s = zero();
  RingElem old_t = zero(), t = one();
  while (!is_zero(r)) {
    RingElem q = div_rem(old_r, r).first;
    RingElem nr = sub(old_r, mul(q, r));
    old_r = std::move(r);
    r = std::move(nr);
    RingElem ns = sub(old_s, mul(q, s));
    old_s = std::move(s);
    s = std::move(ns);
    RingElem nt = sub(old_t, mul(q, t));
    old_t = std::move(t);
    t = std::move(nt);
  }
  RingElem u = normal_unit(old_r);
  return {mul(u, old_r), mul(u, old_s), mul(u, old_t)};
}

RingElem CoeffDomain::gcd(const RingElem& x, const RingElem& y) const {
  if (kind_ == DomainKind::Integers) {
    check(x);
    check(y);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), as_z(x).get_mpz_t(), as_z(y).get_mpz_t());
    return mk(g);
  }
  if (is_zero(x) && is_zero(y)) return zero();
  return ext_gcd(x, y).g;
}

RingElem CoeffDomain::lcm(const RingElem& x, const RingElem& y) const {
  if (is_zero(x) || is_zero(y)) throw DomainError("lcm of zero");
  if (kind_ == DomainKind::Integers) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), as_z(x).get_mpz_t(), as_z(y).get_mpz_t());
    return mk(l);
  }
  return normalize(mul(div_exact(x, gcd(x, y)), y));
}

RingElem CoeffDomain::normal_unit(const RingElem& x) const {
  check(x);
  if (is_zero(x)) return one();
  switch (kind_) {
    case DomainKind::Integers: return from_int(sgn(as_z(x)) < 0 ? -1 : 1);
    case DomainKind::Rationals:
    case DomainKind::PrimeField: return inverse(x);
    case DomainKind::PolyOverPrimeField:
      return mk(std::vector<std::uint64_t>{mod_inv(as_fpp(x).c.back(), p_)});
    case DomainKind::PolyOverRationals: return mk(std::vector<mpq_class>{mpq_class(1 / as_qp(x).c.back())});
  }
  throw DomainError("unreachable");
}

RingElem CoeffDomain::normalize(const RingElem& x) const { return mul(normal_unit(x), x); }

StripResult CoeffDomain::strip_witness(const RingElem& x, const RingElem& a) const {
  check(x);
  check(a);
  if (is_zero(a)) throw DomainError("witness must be nonzero");
  if (is_zero(x)) return {zero(), 0};
  StripResult out{x, 0};
  while (true) {
    RingElem g = gcd(out.core, a);
    if (is_unit(g)) break;
    out.core = div_exact(out.core, g);
    ++out.k;
  }
  return out;
}

std::strong_ordering CoeffDomain::size_compare(const RingElem& x, const RingElem& y) const {
  check(x);
  check(y);
  switch (kind_) {
    case DomainKind::Integers: {
      int c = mpz_cmpabs(as_z(x).get_mpz_t(), as_z(y).get_mpz_t());
      if (c != 0) return c <=> 0;
      return sgn(as_z(y)) <=> sgn(as_z(x));  // positive before negative
    }
    case DomainKind::Rationals: return cmp(as_q(x), as_q(y)) <=> 0;
    case DomainKind::PrimeField: return as_fp(x) <=> as_fp(y);
    case DomainKind::PolyOverPrimeField: {
      const auto& a = as_fpp(x).c;
      const auto& b = as_fpp(y).c;
      if (a.size() != b.size()) return a.size() <=> b.size();
      for (std::size_t k = a.size(); k-- > 0;)
        if (a[k] != b[k]) return a[k] <=> b[k];
      return std::strong_ordering::equal;
    }
    case DomainKind::PolyOverRationals: {
      const auto& a = as_qp(x).c;
      const auto& b = as_qp(y).c;
      if (a.size() != b.size()) return a.size() <=> b.size();
      for (std::size_t k = a.size(); k-- > 0;) {
        int c = cmp(a[k], b[k]);
        if (c != 0) return c <=> 0;
      }
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

RingElem CoeffDomain::frobenius(const RingElem& x, std::uint64_t q) const {
  check(x);
  if (kind_ == DomainKind::PrimeField) return x;  // a^(p^e) = a
  if (kind_ == DomainKind::PolyOverPrimeField) {
    const auto& c = as_fpp(x).c;
    if (c.empty()) return x;
    std::vector<std::uint64_t> r((c.size() - 1) * q + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) r[i * q] = c[i];
    return mk(std::move(r));
  }
  throw DomainError("Frobenius requires positive characteristic, got " + name());
}

CoeffDomain CoeffDomain::base_field() const {
  if (kind_ == DomainKind::PolyOverPrimeField) return prime_field(p_);
  if (kind_ == DomainKind::PolyOverRationals) return rationals();
  throw DomainError(name() + " is not a polynomial domain");
}

RingElem CoeffDomain::evaluate(const RingElem& x, const RingElem& s, const CoeffDomain& base) const {
  check(x);
  base.check(s);
  if (!(base == base_field())) throw DomainError("evaluation point lies outside the base field");
  RingElem acc = base.zero();
  if (kind_ == DomainKind::PolyOverPrimeField) {
    const auto& c = as_fpp(x).c;
    for (std::size_t k = c.size(); k-- > 0;) acc = base.add(base.mul(acc, s), mk_fp(c[k]));
  } else {
    const auto& c = as_qp(x).c;
    for (std::size_t k = c.size(); k-- > 0;) acc = base.add(base.mul(acc, s), mk(c[k]));
  }
  return acc;
}

RingElem CoeffDomain::reduce_mod(const RingElem& x, const CoeffDomain& target) const {
  check(x);
  if (kind_ != DomainKind::Integers || target.kind() != DomainKind::PrimeField)
    throw DomainError("reduction mod q is defined from ZZ to GF(q) only");
  return target.from_mpz(as_z(x));
}

std::string CoeffDomain::to_string(const RingElem& x) const {
  check(x);
  switch (kind_) {
    case DomainKind::Integers: return as_z(x).get_str();
    case DomainKind::Rationals: return as_q(x).get_str();
    case DomainKind::PrimeField: return std::to_string(as_fp(x));
    case DomainKind::PolyOverPrimeField: return poly_to_string(as_fpp(x).c, var_);
    case DomainKind::PolyOverRationals: return poly_to_string(as_qp(x).c, var_);
  }
  return "?";
}

bool CoeffDomain::is_negative(const RingElem& x) const {
  if (kind_ == DomainKind::Integers) return sgn(as_z(x)) < 0;
  if (kind_ == DomainKind::Rationals) return sgn(as_q(x)) < 0;
  return false;
}

// ---------------------------------------------------------------------------

Localization::Localization(CoeffDomain dom, RingElem a) : dom_(std::move(dom)), a_(std::move(a)) {
  if (dom_.is_zero(a_)) throw DomainError("localization at zero");
}

LocalizedElem Localization::make(RingElem numerator, unsigned apower) const {
  if (dom_.is_zero(numerator)) return {dom_.zero(), 0};
  while (apower > 0 && dom_.divides(a_, numerator)) {
    numerator = dom_.div_exact(numerator, a_);
    --apower;
  }
  return {std::move(numerator), apower};
}

LocalizedElem Localization::add(const LocalizedElem& x, const LocalizedElem& y) const {
  unsigned k = std::max(x.apower, y.apower);
  RingElem n = dom_.add(dom_.mul(x.numerator, dom_.pow(a_, k - x.apower)),
                        dom_.mul(y.numerator, dom_.pow(a_, k - y.apower)));
  return make(std::move(n), k);
}

LocalizedElem Localization::mul(const LocalizedElem& x, const LocalizedElem& y) const {
  return make(dom_.mul(x.numerator, y.numerator), x.apower + y.apower);
}

bool Localization::equal(const LocalizedElem& x, const LocalizedElem& y) const {
  return dom_.equal(dom_.mul(x.numerator, dom_.pow(a_, y.apower)), dom_.mul(y.numerator, dom_.pow(a_, x.apower)));
}

bool Localization::is_unit(const LocalizedElem& x) const {
  if (dom_.is_zero(x.numerator)) return false;
  return dom_.is_unit(dom_.core(x.numerator, a_));
}

bool Localization::divides(const LocalizedElem& d, const LocalizedElem& x) const {
  if (dom_.is_zero(d.numerator)) return dom_.is_zero(x.numerator);
  if (dom_.is_zero(x.numerator)) return true;
  return dom_.divides(dom_.core(d.numerator, a_), dom_.core(x.numerator, a_));
}

std::string Localization::to_string(const LocalizedElem& x) const {
  if (x.apower == 0) return dom_.to_string(x.numerator);
  return dom_.to_string(x.numerator) + " / (" + dom_.to_string(a_) + ")^" + std::to_string(x.apower);
}

}  // namespace gfree
