#include "linea/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

namespace linea {
namespace {

// ----- integer polynomials, used only to build Phi_n -----

using ZPoly = std::vector<Integer>;  // low degree first

ZPoly xn_minus_1(int n) {
  ZPoly p(n + 1, Integer(0));
  p[0] = -1;
  p[n] = 1;
  return p;
}

// Exact division by a monic divisor; the remainder must vanish.
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  if (dn < dd) throw InternalError("cyclotomic division underflow");
  ZPoly quo(dn - dd + 1, Integer(0));
  for (int k = dn - dd; k >= 0; --k) {
    Integer c = num[k + dd];
    if (c == 0) continue;
    quo[k] = c;
    for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  for (const Integer& c : num)
    if (c != 0) throw InternalError("cyclotomic division not exact");
  return quo;
}

const ZPoly& cyclotomic_impl(int n, std::map<int, ZPoly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  ZPoly p = xn_minus_1(n);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = zdiv_exact(std::move(p), cyclotomic_impl(d, memo));
  return memo.emplace(n, std::move(p)).first->second;
}

// ----- rational polynomials, used for arithmetic mod Phi_n -----

using QPoly = std::vector<Rational>;

int qdegree(const QPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// num = quo * den + rem with deg rem < deg den.
void qdivmod(QPoly num, const QPoly& den, QPoly& quo, QPoly& rem) {
  const int dd = qdegree(den);
  if (dd < 0) throw InternalError("polynomial division by zero");
  const Rational lead = den[dd];
  int dn = qdegree(num);
  quo.assign(std::max(dn - dd + 1, 1), Rational(0));
  while (dn >= dd) {
    Rational c = num[dn] / lead;
    quo[dn - dd] = c;
    for (int i = 0; i <= dd; ++i) num[dn - dd + i] -= c * den[i];
    dn = qdegree(num);
  }
  rem = std::move(num);
}

struct CycloContext {
  int degree = 0;  // phi(n)
  QPoly modulus;   // Phi_n
  // x^k reduced mod Phi_n for k = 0 .. max(2*degree-2, n-1); each entry has
  // exactly `degree` coordinates.
  std::vector<std::vector<Rational>> power;
};

const CycloContext& cyclo_context(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const CycloContext>> cache;
  static std::map<int, ZPoly> poly_memo;

  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto ctx = std::make_unique<CycloContext>();
  const ZPoly& phi = cyclotomic_impl(n, poly_memo);
  ctx->degree = static_cast<int>(phi.size()) - 1;
  ctx->modulus.reserve(phi.size());
  for (const Integer& c : phi) ctx->modulus.push_back(make_rational(c, Integer(1)));

  const int d = ctx->degree;
  const int limit = std::max(2 * d - 2, n - 1);
  ctx->power.resize(limit + 1, std::vector<Rational>(d, Rational(0)));
  ctx->power[0][0] = 1;
  for (int k = 1; k <= limit; ++k) {
    // multiply the previous power by x, then fold the overflow term via
    // x^d = -(phi_0 + phi_1 x + ... + phi_{d-1} x^{d-1})
    const auto& prev = ctx->power[k - 1];
    auto& cur = ctx->power[k];
    for (int i = 1; i < d; ++i) cur[i] = prev[i - 1];
    const Rational& overflow = prev[d - 1];
    if (overflow != 0)
      for (int i = 0; i < d; ++i) cur[i] -= overflow * ctx->modulus[i];
  }

  const CycloContext& ref = *ctx;
  cache.emplace(n, std::move(ctx));
  return ref;
}

long mod_inverse(long a, long p) {
  long t = 0, new_t = 1;
  long r = p, new_r = a % p;
  if (new_r < 0) new_r += p;
  while (new_r != 0) {
    long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw FieldError("no inverse modulo p");
  return t < 0 ? t + p : t;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field()))
    throw FieldError("field descriptor mismatch: " + a.field().name() + " vs " + b.field().name());
}

}  // namespace

FieldDescriptor FieldDescriptor::rationals() { return {FieldKind::Rational, 0, 0}; }

FieldDescriptor FieldDescriptor::cyclotomic(int n) {
  if (n < 3) throw InputError("cyclotomic order must be at least 3");
  return {FieldKind::Cyclotomic, n, 0};
}

FieldDescriptor FieldDescriptor::prime_field(long p) {
  if (p >= (1L << 31)) throw InputError("prime field characteristic must be below 2^31");
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
  return {FieldKind::Prime, 0, p};
}

int FieldDescriptor::degree() const {
  return kind == FieldKind::Cyclotomic ? static_cast<int>(euler_phi(order)) : 1;
}

std::string FieldDescriptor::name() const {
  switch (kind) {
    case FieldKind::Rational: return "Q";
    case FieldKind::Cyclotomic: return "Q(zeta_" + std::to_string(order) + ")";
    case FieldKind::Prime: return "GF(" + std::to_string(prime) + ")";
  }
  return "?";
}

FieldElement FieldElement::zero(const FieldDescriptor& field) {
  if (field.kind == FieldKind::Prime) return FieldElement(field, {}, 0);
  return FieldElement(field, std::vector<Rational>(field.degree(), Rational(0)), 0);
}

FieldElement FieldElement::one(const FieldDescriptor& field) {
  if (field.kind == FieldKind::Prime) return FieldElement(field, {}, field.prime == 1 ? 0 : 1);
  auto coeffs = std::vector<Rational>(field.degree(), Rational(0));
  coeffs[0] = 1;
  return FieldElement(field, std::move(coeffs), 0);
}

FieldElement FieldElement::from_rational(const FieldDescriptor& field, const Rational& value) {
  if (field.kind == FieldKind::Prime) {
    Integer num = value.get_num() % field.prime;
    Integer den = value.get_den() % field.prime;
    long n = num.get_si();
    long d = den.get_si();
    if (n < 0) n += field.prime;
    if (d == 0) throw FieldError("denominator vanishes in GF(p)");
    return from_residue(field, n * mod_inverse(d, field.prime) % field.prime);
  }
  auto coeffs = std::vector<Rational>(field.degree(), Rational(0));
  coeffs[0] = value;
  return FieldElement(field, std::move(coeffs), 0);
}

FieldElement FieldElement::from_integer(const FieldDescriptor& field, long value) {
  return from_rational(field, Rational(value));
}

FieldElement FieldElement::from_coefficients(const FieldDescriptor& field, std::vector<Rational> coeffs) {
  if (field.kind == FieldKind::Prime) throw FieldError("coefficient payload needs characteristic 0");
  if (static_cast<int>(coeffs.size()) != field.degree())
    throw InputError("payload length " + std::to_string(coeffs.size()) + " does not match field degree " +
                     std::to_string(field.degree()));
  return FieldElement(field, std::move(coeffs), 0);
}

FieldElement FieldElement::from_residue(const FieldDescriptor& field, long residue) {
  if (field.kind != FieldKind::Prime) throw FieldError("residue payload needs a prime field");
  long r = residue % field.prime;
  if (r < 0) r += field.prime;
  return FieldElement(field, {}, r);
}

bool FieldElement::is_zero() const {
  if (field_.kind == FieldKind::Prime) return residue_ == 0;
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_one() const { return *this == one(field_); }

const std::vector<Rational>& FieldElement::coefficients() const {
  if (field_.kind == FieldKind::Prime) throw FieldError("GF(p) elements have no coefficient payload");
  return coeffs_;
}

long FieldElement::residue() const {
  if (field_.kind != FieldKind::Prime) throw FieldError("characteristic-0 elements have no residue");
  return residue_;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.field_.kind == FieldKind::Prime)
    return FieldElement::from_residue(a.field_, (a.residue_ + b.residue_) % a.field_.prime);
  auto coeffs = a.coeffs_;
  for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += b.coeffs_[i];
  return FieldElement(a.field_, std::move(coeffs), 0);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement FieldElement::operator-() const {
  if (field_.kind == FieldKind::Prime)
    return from_residue(field_, residue_ == 0 ? 0 : field_.prime - residue_);
  auto coeffs = coeffs_;
  for (auto& c : coeffs) c = -c;
  return FieldElement(field_, std::move(coeffs), 0);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  switch (a.field_.kind) {
    case FieldKind::Prime:
      return FieldElement::from_residue(a.field_, a.residue_ * b.residue_ % a.field_.prime);
    case FieldKind::Rational: {
      std::vector<Rational> coeffs{a.coeffs_[0] * b.coeffs_[0]};
      return FieldElement(a.field_, std::move(coeffs), 0);
    }
    case FieldKind::Cyclotomic: {
      const auto& ctx = cyclo_context(a.field_.order);
      const int d = ctx.degree;
      std::vector<Rational> conv(2 * d - 1, Rational(0));
      for (int i = 0; i < d; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; j < d; ++j) conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
      std::vector<Rational> out(conv.begin(), conv.begin() + d);
      for (int k = d; k < 2 * d - 1; ++k) {
        if (conv[k] == 0) continue;
        for (int i = 0; i < d; ++i) out[i] += conv[k] * ctx.power[k][i];
      }
      return FieldElement(a.field_, std::move(out), 0);
    }
  }
  throw InternalError("unreachable field kind");
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw FieldError("inverse of zero");
  switch (field_.kind) {
    case FieldKind::Prime:
      return from_residue(field_, mod_inverse(residue_, field_.prime));
    case FieldKind::Rational:
      return FieldElement(field_, {Rational(1) / coeffs_[0]}, 0);
    case FieldKind::Cyclotomic: {
      // extended Euclid in Q[x]: u*self + v*Phi_n = gcd, a nonzero constant
      const auto& ctx = cyclo_context(field_.order);
      QPoly r0 = ctx.modulus;
      QPoly r1 = coeffs_;
      QPoly s0{Rational(0)}, s1{Rational(1)};
      while (qdegree(r1) >= 0) {
        QPoly quo, rem;
        qdivmod(r0, r1, quo, rem);
        r0 = std::exchange(r1, std::move(rem));
        QPoly qs = qmul(quo, s1);
        QPoly next = s0;
        next.resize(std::max(next.size(), qs.size()), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) next[i] -= qs[i];
        s0 = std::exchange(s1, std::move(next));
      }
      const int g = qdegree(r0);
      if (g != 0) throw InternalError("cyclotomic gcd is not constant");
      std::vector<Rational> out(ctx.degree, Rational(0));
      for (size_t i = 0; i < s0.size() && i < out.size(); ++i) out[i] = s0[i] / r0[0];
      return FieldElement(field_, std::move(out), 0);
    }
  }
  throw InternalError("unreachable field kind");
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw FieldError("division by zero");
  return a * b.inverse();
}

FieldElement FieldElement::conjugate() const {
  if (field_.characteristic() != 0) throw FieldError("conjugation needs characteristic 0");
  if (field_.kind == FieldKind::Rational) return *this;
  // zeta^k maps to zeta^(n-k); fold each image back into the power basis
  const auto& ctx = cyclo_context(field_.order);
  const int n = field_.order;
  std::vector<Rational> out(ctx.degree, Rational(0));
  for (int k = 0; k < ctx.degree; ++k) {
    if (coeffs_[k] == 0) continue;
    const auto& image = ctx.power[(n - k) % n];
    for (int i = 0; i < ctx.degree; ++i) out[i] += coeffs_[k] * image[i];
  }
  return FieldElement(field_, std::move(out), 0);
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement base = *this;
  FieldElement acc = one(field_);
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.kind == FieldKind::Prime) return a.residue_ == b.residue_;
  return a.coeffs_ == b.coeffs_;
}

std::string FieldElement::to_string() const {
  if (field_.kind == FieldKind::Prime) return std::to_string(residue_);
  if (field_.kind == FieldKind::Rational) return format_rational(coeffs_[0]);
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ", ";
    out << format_rational(coeffs_[i]);
  }
  out << ")";
  return out.str();
}

int compare(const FieldElement& a, const FieldElement& b) {
  if (a.field().kind != b.field().kind)
    return static_cast<int>(a.field().kind) < static_cast<int>(b.field().kind) ? -1 : 1;
  if (a.field().kind == FieldKind::Prime) {
    if (a.field().prime != b.field().prime) return a.field().prime < b.field().prime ? -1 : 1;
    if (a.residue() != b.residue()) return a.residue() < b.residue() ? -1 : 1;
    return 0;
  }
  if (a.field().order != b.field().order) return a.field().order < b.field().order ? -1 : 1;
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  for (size_t i = 0; i < ca.size(); ++i) {
    int c = mpq_cmp(ca[i].get_mpq_t(), cb[i].get_mpq_t());
    if (c != 0) return c;
  }
  return 0;
}

FieldElement primitive_root(int n) {
  if (n < 3) throw InputError("primitive root needs order at least 3");
  const auto field = FieldDescriptor::cyclotomic(n);
  auto coeffs = std::vector<Rational>(field.degree(), Rational(0));
  coeffs[1] = 1;
  return FieldElement::from_coefficients(field, std::move(coeffs));
}

const std::vector<Integer>& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, ZPoly> memo;
  std::lock_guard<std::mutex> lock(mutex);
  return cyclotomic_impl(n, memo);
}

}  // namespace linea
