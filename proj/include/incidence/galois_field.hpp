#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace incidence {

using FieldElement = std::uint8_t;

/// GF(q) for the prime powers q <= 16 as full operation tables. Elements are
/// integers 0..q-1 encoding polynomial coefficients in base p (lowest degree
/// first), so 0 and 1 are the additive and multiplicative identities.
class GaloisField {
 public:
  /// Throws UnsupportedOrder unless q is in {2,3,4,5,7,8,9,11,13,16}.
  explicit GaloisField(unsigned q);

  unsigned order() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  /// Monic modulus coefficients, lowest degree first ({p} style for primes).
  const std::vector<unsigned>& modulus() const { return modulus_; }

  FieldElement add(FieldElement a, FieldElement b) const { return add_[a * q_ + b]; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add_[a * q_ + neg_[b]]; }
  FieldElement neg(FieldElement a) const { return neg_[a]; }
  FieldElement mul(FieldElement a, FieldElement b) const { return mul_[a * q_ + b]; }
  /// Precondition a != 0.
  FieldElement inv(FieldElement a) const { return inv_[a]; }

  /// Conversions between elements and coefficient vectors.
  FieldElement from_coefficients(const std::vector<unsigned>& coeffs) const;
  std::vector<unsigned> coefficients(FieldElement a) const;

  std::string modulus_string() const;
  /// "op,a,b,result" rows for audit.
  std::string tables_csv() const;

  static bool supported(unsigned q);

 private:
  unsigned q_ = 0;
  unsigned p_ = 0;
  unsigned n_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<FieldElement> add_, mul_, neg_, inv_;
};

}  // namespace incidence
