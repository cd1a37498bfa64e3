#include "incidence/enumerate.hpp"

namespace incidence {

std::size_t exhaustive_chunks(const FinitePlane& pl, Statement st) {
  return family(st) == Family::Pappus ? pl.n_lines() : pl.n_points();
}

std::uint64_t exhaustive_estimate(const FinitePlane& pl, Statement st) {
  const std::uint64_t n = pl.n_points();
  const std::uint64_t q = pl.order();
  const std::uint64_t k = q + 1;
  const std::uint64_t range = q * (q - 1) * (q - 2);  // ordered triples off M
  // S, A, A', B, B' are common to the Desargues family.
  const std::uint64_t head = n * (n - 1) * (k - 2) * (n - k) * (k - 2);
  const std::uint64_t off_two = n - 2 * k + 1;
  switch (st) {
    case Statement::D:
    case Statement::HD:
      return head * off_two * (k - 2);
    case Statement::LD:
    case Statement::cD:
      return head * off_two;
    case Statement::wLD:
    case Statement::cwLD:
      return head * (k - 2);
    case Statement::wD:
      return head * (k - 2) * (k - 2);
    case Statement::P:
      return n * (n - 1) * range * range;
    case Statement::LP:
      return n * (n - 1) * range * q * (q - 1);
    case Statement::pP:
    case Statement::sPP:
      return n * (n - 1) * range * off_two;
    case Statement::PB:
      return n * (n - 1) * range * range;
  }
  return 0;
}

}  // namespace incidence
