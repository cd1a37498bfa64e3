#include "incidence/galois_field.hpp"

#include "incidence/error.hpp"

#include <sstream>

namespace incidence {

namespace {

struct FieldSpec {
  unsigned q, p, n;
  std::vector<unsigned> modulus;  // monic, lowest degree first
};

const std::vector<FieldSpec>& specs() {
  static const std::vector<FieldSpec> table = {
      {2, 2, 1, {0, 1}},        {3, 3, 1, {0, 1}},
      {4, 2, 2, {1, 1, 1}},     // x^2 + x + 1
      {5, 5, 1, {0, 1}},        {7, 7, 1, {0, 1}},
      {8, 2, 3, {1, 1, 0, 1}},  // x^3 + x + 1
      {9, 3, 2, {1, 0, 1}},     // x^2 + 1
      {11, 11, 1, {0, 1}},      {13, 13, 1, {0, 1}},
      {16, 2, 4, {1, 1, 0, 0, 1}},  // x^4 + x + 1
  };
  return table;
}

}  // namespace

bool GaloisField::supported(unsigned q) {
  for (const auto& s : specs()) {
    if (s.q == q) return true;
  }
  return false;
}

GaloisField::GaloisField(unsigned q) {
  const FieldSpec* spec = nullptr;
  for (const auto& s : specs()) {
    if (s.q == q) spec = &s;
  }
  if (spec == nullptr) {
    throw Error(ErrorCode::UnsupportedOrder,
                "no field of order " + std::to_string(q) +
                    " (supported: 2,3,4,5,7,8,9,11,13,16)");
  }
  q_ = spec->q;
  p_ = spec->p;
  n_ = spec->n;
  modulus_ = spec->modulus;

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  for (unsigned a = 0; a < q_; ++a) {
    const auto ca = coefficients(static_cast<FieldElement>(a));
    for (unsigned b = 0; b < q_; ++b) {
      const auto cb = coefficients(static_cast<FieldElement>(b));
      std::vector<unsigned> sum(n_);
      for (unsigned i = 0; i < n_; ++i) sum[i] = (ca[i] + cb[i]) % p_;
      add_[a * q_ + b] = from_coefficients(sum);

      // Schoolbook product, then reduce by the monic modulus.
      std::vector<unsigned> prod(2 * n_, 0);
      for (unsigned i = 0; i < n_; ++i) {
        for (unsigned j = 0; j < n_; ++j) {
          prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        }
      }
      for (unsigned d = 2 * n_ - 1; d >= n_; --d) {
        const unsigned c = prod[d];
        if (c == 0) continue;
        for (unsigned i = 0; i <= n_; ++i) {
          prod[d - n_ + i] = (prod[d - n_ + i] + (p_ - c) * modulus_[i]) % p_;
        }
      }
      prod.resize(n_);
      mul_[a * q_ + b] = from_coefficients(prod);
    }
  }
  for (unsigned a = 0; a < q_; ++a) {
    for (unsigned b = 0; b < q_; ++b) {
      if (add_[a * q_ + b] == 0) neg_[a] = static_cast<FieldElement>(b);
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<FieldElement>(b);
    }
  }

  // Exhaustive field-axiom gate.
  for (unsigned a = 0; a < q_; ++a) {
    if (a != 0 && mul_[a * q_ + inv_[a]] != 1) {
      throw Error(ErrorCode::ConstructionFailed,
                  "GF(" + std::to_string(q_) + "): element " +
                      std::to_string(a) + " has no inverse");
    }
    for (unsigned b = 0; b < q_; ++b) {
      if (add_[a * q_ + b] != add_[b * q_ + a] ||
          mul_[a * q_ + b] != mul_[b * q_ + a]) {
        throw Error(ErrorCode::ConstructionFailed, "field tables not commutative");
      }
      for (unsigned c = 0; c < q_; ++c) {
        const auto lhs = mul_[a * q_ + add_[b * q_ + c]];
        const auto rhs = add_[mul_[a * q_ + b] * q_ + mul_[a * q_ + c]];
        const auto assoc_l = mul_[mul_[a * q_ + b] * q_ + c];
        const auto assoc_r = mul_[a * q_ + mul_[b * q_ + c]];
        if (lhs != rhs || assoc_l != assoc_r) {
          throw Error(ErrorCode::ConstructionFailed,
                      "field tables violate distributivity or associativity");
        }
      }
    }
  }
}

FieldElement GaloisField::from_coefficients(
    const std::vector<unsigned>& coeffs) const {
  unsigned v = 0;
  for (unsigned i = n_; i-- > 0;) v = v * p_ + (i < coeffs.size() ? coeffs[i] % p_ : 0);
  return static_cast<FieldElement>(v);
}

std::vector<unsigned> GaloisField::coefficients(FieldElement a) const {
  std::vector<unsigned> c(n_);
  unsigned v = a;
  for (unsigned i = 0; i < n_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

std::string GaloisField::modulus_string() const {
  if (n_ == 1) return "prime field mod " + std::to_string(p_);
  std::ostringstream out;
  bool first = true;
  for (unsigned i = n_ + 1; i-- > 0;) {
    if (modulus_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (modulus_[i] != 1 || i == 0) out << modulus_[i];
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

std::string GaloisField::tables_csv() const {
  std::ostringstream out;
  out << "op,a,b,result\n";
  for (unsigned a = 0; a < q_; ++a) {
    for (unsigned b = 0; b < q_; ++b) {
      out << "add," << a << ',' << b << ',' << unsigned{add_[a * q_ + b]} << '\n';
    }
  }
  for (unsigned a = 0; a < q_; ++a) {
    for (unsigned b = 0; b < q_; ++b) {
      out << "mul," << a << ',' << b << ',' << unsigned{mul_[a * q_ + b]} << '\n';
    }
  }
  return out.str();
}

}  // namespace incidence
