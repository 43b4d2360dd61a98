#pragma once

#include <string>
#include <vector>

#include "linea/numeric.hpp"

namespace linea {

enum class FieldKind { Rational, Cyclotomic, Prime };

// Identifies the coefficient field: the rationals, a cyclotomic extension
// Q(zeta_n) with n >= 3, or a prime field GF(p) with p < 2^31.
struct FieldDescriptor {
  FieldKind kind = FieldKind::Rational;
  int order = 0;   // cyclotomic: n
  long prime = 0;  // prime field: p

  static FieldDescriptor rationals();
  static FieldDescriptor cyclotomic(int n);
  static FieldDescriptor prime_field(long p);

  long characteristic() const { return kind == FieldKind::Prime ? prime : 0; }
  // Dimension of the field as a vector space over Q (1 for GF(p) payloads).
  int degree() const;
  std::string name() const;

  bool operator==(const FieldDescriptor&) const = default;
};

// An exact scalar. Characteristic-0 payloads are coordinate vectors in the
// power basis 1, zeta, ..., zeta^(phi(n)-1) of Q[x]/(Phi_n); Q itself is the
// degree-1 case. GF(p) stores a residue in [0, p). Values are immutable
// after construction and safe to share across threads.
class FieldElement {
 public:
  FieldElement() : FieldElement(zero(FieldDescriptor::rationals())) {}

  static FieldElement zero(const FieldDescriptor& field);
  static FieldElement one(const FieldDescriptor& field);
  static FieldElement from_rational(const FieldDescriptor& field, const Rational& value);
  static FieldElement from_integer(const FieldDescriptor& field, long value);
  static FieldElement from_coefficients(const FieldDescriptor& field, std::vector<Rational> coeffs);
  static FieldElement from_residue(const FieldDescriptor& field, long residue);

  const FieldDescriptor& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Characteristic 0 only: coordinates in the power basis, length degree().
  const std::vector<Rational>& coefficients() const;
  // Prime fields only.
  long residue() const;

  FieldElement operator-() const;
  FieldElement inverse() const;              // throws FieldError on zero
  FieldElement conjugate() const;            // complex conjugation; char 0 only
  FieldElement pow(long exponent) const;     // negative exponents need a nonzero base

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  FieldElement(FieldDescriptor field, std::vector<Rational> coeffs, long residue)
      : field_(std::move(field)), coeffs_(std::move(coeffs)), residue_(residue) {}

  FieldDescriptor field_;
  std::vector<Rational> coeffs_;  // char 0 payload
  long residue_ = 0;              // GF(p) payload
};

// Total order used for deterministic sorting and exact deduplication.
// Returns <0, 0, >0.
int compare(const FieldElement& a, const FieldElement& b);

// zeta_n as an element of Q(zeta_n); requires n >= 3.
FieldElement primitive_root(int n);

// Coefficients of Phi_n, low degree first, monic; cached per order.
const std::vector<Integer>& cyclotomic_polynomial(int n);

}  // namespace linea
