#include "incidence/incidence_structure.hpp"

#include "incidence/error.hpp"

#include <bit>

namespace incidence {

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

std::vector<Bits> point_rows(const IncidenceStructure& s) {
  std::vector<Bits> rows(s.n_points(), Bits(words_for(s.n_lines())));
  for (std::size_t p = 0; p < s.n_points(); ++p) {
    for (std::size_t l = 0; l < s.n_lines(); ++l) {
      if (s.incident(p, l)) rows[p][l / 64] |= std::uint64_t{1} << (l % 64);
    }
  }
  return rows;
}

std::vector<Bits> line_columns(const IncidenceStructure& s) {
  std::vector<Bits> cols(s.n_lines(), Bits(words_for(s.n_points())));
  for (std::size_t p = 0; p < s.n_points(); ++p) {
    for (std::size_t l = 0; l < s.n_lines(); ++l) {
      if (s.incident(p, l)) cols[l][p / 64] |= std::uint64_t{1} << (p % 64);
    }
  }
  return cols;
}

std::size_t common(const Bits& a, const Bits& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += std::popcount(a[i] & b[i]);
  return n;
}

bool common3(const Bits& a, const Bits& b, const Bits& c) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & b[i] & c[i]) != 0) return true;
  }
  return false;
}

bool has_quadrilateral(const std::vector<Bits>& rows) {
  const std::size_t n = rows.size();
  auto col = [&](std::size_t a, std::size_t b, std::size_t c) {
    return common3(rows[a], rows[b], rows[c]);
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        if (col(a, b, c)) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (!col(a, b, d) && !col(a, c, d) && !col(b, c, d)) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

IncidenceStructure::IncidenceStructure(std::size_t n_points,
                                       std::size_t n_lines,
                                       std::vector<std::uint8_t> matrix)
    : n_points_(n_points), n_lines_(n_lines), matrix_(std::move(matrix)) {
  if (matrix_.size() != n_points_ * n_lines_) {
    throw Error(ErrorCode::MalformedMatrix,
                "incidence matrix has " + std::to_string(matrix_.size()) +
                    " entries, expected " +
                    std::to_string(n_points_ * n_lines_));
  }
  for (auto v : matrix_) {
    if (v > 1) {
      throw Error(ErrorCode::MalformedMatrix,
                  "incidence matrix entry outside {0,1}");
    }
  }
}

std::vector<std::size_t> IncidenceStructure::points_on(std::size_t line) const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < n_points_; ++p) {
    if (incident(p, line)) out.push_back(p);
  }
  return out;
}

std::vector<std::size_t> IncidenceStructure::lines_through(
    std::size_t point) const {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < n_lines_; ++l) {
    if (incident(point, l)) out.push_back(l);
  }
  return out;
}

IncidenceStructure IncidenceStructure::transposed() const {
  std::vector<std::uint8_t> t(matrix_.size());
  for (std::size_t p = 0; p < n_points_; ++p) {
    for (std::size_t l = 0; l < n_lines_; ++l) {
      t[l * n_points_ + p] = matrix_[p * n_lines_ + l];
    }
  }
  return IncidenceStructure(n_lines_, n_points_, std::move(t));
}

AxiomReport validate_axioms(const IncidenceStructure& s,
                            std::size_t max_violations) {
  AxiomReport report;
  auto record = [&](AxiomViolation v) {
    ++report.violations_total;
    if (report.violations.size() < max_violations) {
      report.violations.push_back(v);
    }
  };

  const auto rows = point_rows(s);
  const auto cols = line_columns(s);

  for (std::size_t p = 0; p < s.n_points(); ++p) {
    for (std::size_t q = p + 1; q < s.n_points(); ++q) {
      const auto c = common(rows[p], rows[q]);
      if (c != 1) {
        report.pi1_ok = false;
        record({Axiom::PI1, static_cast<long>(p), static_cast<long>(q), c});
      }
    }
  }
  for (std::size_t l = 0; l < s.n_lines(); ++l) {
    for (std::size_t m = l + 1; m < s.n_lines(); ++m) {
      const auto c = common(cols[l], cols[m]);
      if (c != 1) {
        report.pi2_ok = false;
        record({Axiom::PI2, static_cast<long>(l), static_cast<long>(m), c});
      }
    }
  }
  if (!has_quadrilateral(rows)) {
    report.pi3_ok = false;
    record({Axiom::PI3, -1, -1, 0});
  }
  return report;
}

IncidenceStructure dualize(const IncidenceStructure& s) {
  const auto report = validate_axioms(s, 1);
  if (!report.ok()) {
    throw Error(ErrorCode::NotAPlane,
                "cannot dualize: " + describe(report.violations.front()));
  }
  return s.transposed();
}

std::string describe(const AxiomViolation& v) {
  switch (v.axiom) {
    case Axiom::PI1:
      return "PI1: points " + std::to_string(v.first) + " and " +
             std::to_string(v.second) + " share " + std::to_string(v.common) +
             " lines";
    case Axiom::PI2:
      return "PI2: lines " + std::to_string(v.first) + " and " +
             std::to_string(v.second) + " share " + std::to_string(v.common) +
             " points";
    case Axiom::PI3:
      return "PI3: no four points with no three collinear";
  }
  return {};
}

}  // namespace incidence
