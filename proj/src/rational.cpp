#include "incidence/rational.hpp"

#include "incidence/error.hpp"

#include <cctype>

namespace incidence {

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"}
                                                   : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-') {
    throw Error(ErrorCode::ParseError,
                "not a rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::ParseError,
                "zero denominator: '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

mpz_class floor_of(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

mpz_class ceil_sqrt(const Rational& r) {
  if (r <= 0) return 0;
  // k = ceil(sqrt(n/d)) is the least k with k^2 * d >= n.
  const mpz_class& n = r.get_num();
  const mpz_class& d = r.get_den();
  mpz_class k;
  mpz_class quotient = n / d;
  mpz_sqrt(k.get_mpz_t(), quotient.get_mpz_t());
  while (k > 0 && (k - 1) * (k - 1) * d >= n) --k;
  while (k * k * d < n) ++k;
  return k;
}

}  // namespace incidence
