#include "incidence/quasifield.hpp"

#include "incidence/error.hpp"

#include <sstream>

namespace incidence {

namespace {

std::string s(unsigned v) { return std::to_string(v); }

}  // namespace

QuasifieldReport validate_quasifield(const QuasifieldTable& t,
                                     std::size_t max_violations) {
  const unsigned n = t.order;
  if (n == 0 || n > 32) {
    throw Error(ErrorCode::MalformedTable, "quasifield order must be in 1..32");
  }
  if (t.add.size() != n * n || t.mul.size() != n * n) {
    throw Error(ErrorCode::MalformedTable, "quasifield tables are not " + s(n) + "x" + s(n));
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (t.add[i] >= n || t.mul[i] >= n) {
      throw Error(ErrorCode::MalformedTable, "table entry out of range");
    }
  }
  if (t.zero >= n || t.one >= n || t.zero == t.one) {
    throw Error(ErrorCode::MalformedTable, "bad designated zero/one");
  }

  QuasifieldReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    if (report.violations.size() < max_violations) report.violations.push_back(std::move(msg));
  };

  for (unsigned a = 0; a < n; ++a) {
    if (t.plus(a, t.zero) != a) fail("zero is not an additive identity for " + s(a));
    bool has_neg = false;
    for (unsigned b = 0; b < n; ++b) {
      if (t.plus(a, b) != t.plus(b, a)) fail("addition not commutative at " + s(a) + "," + s(b));
      if (t.plus(a, b) == t.zero) has_neg = true;
      for (unsigned c = 0; c < n; ++c) {
        if (t.plus(t.plus(a, b), c) != t.plus(a, t.plus(b, c))) {
          fail("addition not associative at " + s(a) + "," + s(b) + "," + s(c));
        }
        if (t.times(t.plus(a, b), c) != t.plus(t.times(a, c), t.times(b, c))) {
          fail("right distributivity fails at " + s(a) + "," + s(b) + "," + s(c));
        }
      }
    }
    if (!has_neg) fail("no additive inverse for " + s(a));
  }

  for (unsigned a = 0; a < n; ++a) {
    if (t.times(t.one, a) != a || t.times(a, t.one) != a) fail("one is not an identity for " + s(a));
    if (t.times(a, t.zero) != t.zero || t.times(t.zero, a) != t.zero) {
      fail("zero is not absorbing for " + s(a));
    }
    for (unsigned b = 0; b < n; ++b) {
      if (a != t.zero && b != t.zero && t.times(a, b) == t.zero) {
        fail("zero divisor pair " + s(a) + "," + s(b));
      }
    }
  }

  for (unsigned a = 0; a < n; ++a) {
    if (a == t.zero) continue;
    std::vector<unsigned> left(n, 0), right(n, 0);
    for (unsigned x = 0; x < n; ++x) {
      ++left[t.times(a, x)];
      ++right[t.times(x, a)];
    }
    for (unsigned b = 0; b < n; ++b) {
      if (left[b] != 1) fail(s(a) + "∘x = " + s(b) + " has " + s(left[b]) + " solutions");
      if (right[b] != 1) fail("x∘" + s(a) + " = " + s(b) + " has " + s(right[b]) + " solutions");
    }
  }

  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) {
      if (a == b) continue;
      std::vector<unsigned> count(n, 0);
      // x∘a = x∘b + c  <=>  c = x∘a - x∘b; each c must be hit exactly once.
      for (unsigned x = 0; x < n; ++x) {
        const auto xb = t.times(x, b);
        for (unsigned c = 0; c < n; ++c) {
          if (t.plus(xb, c) == t.times(x, a)) ++count[c];
        }
      }
      for (unsigned c = 0; c < n; ++c) {
        if (count[c] != 1) {
          fail("x∘" + s(a) + " = x∘" + s(b) + " + " + s(c) + " has " + s(count[c]) + " solutions");
        }
      }
    }
  }
  return report;
}

QuasifieldTable prime_field_table(unsigned p) {
  QuasifieldTable t;
  t.order = p;
  t.add.resize(p * p);
  t.mul.resize(p * p);
  for (unsigned a = 0; a < p; ++a) {
    for (unsigned b = 0; b < p; ++b) {
      t.add[a * p + b] = static_cast<std::uint8_t>((a + b) % p);
      t.mul[a * p + b] = static_cast<std::uint8_t>((a * b) % p);
    }
  }
  return t;
}

QuasifieldTable hall9_quasifield() {
  constexpr unsigned p = 3;
  constexpr unsigned r = 0;  // f(x) = x^2 - r x - s = x^2 + 1
  constexpr unsigned s_coef = 2;
  auto f = [](unsigned c) { return (c * c + (p - r) * c % p + (p - s_coef)) % p; };
  auto inv = [](unsigned d) { return d == 1 ? 1u : 2u; };

  QuasifieldTable t;
  t.order = 9;
  t.add.resize(81);
  t.mul.resize(81);
  for (unsigned x = 0; x < 9; ++x) {
    const unsigned a = x % 3, b = x / 3;
    for (unsigned y = 0; y < 9; ++y) {
      const unsigned c = y % 3, d = y / 3;
      t.add[x * 9 + y] = static_cast<std::uint8_t>((a + c) % p + 3 * ((b + d) % p));
      unsigned u, v;
      if (d == 0) {
        u = a * c % p;
        v = b * c % p;
      } else {
        // (a + λb)(c + λd) = ac - b d^-1 f(c) + λ(ad - bc + rb)
        u = (a * c + p * p - b * inv(d) * f(c) % p) % p;
        v = (a * d + p * p - b * c % p + r * b) % p;
      }
      t.mul[x * 9 + y] = static_cast<std::uint8_t>(u + 3 * v);
    }
  }
  return t;
}

FinitePlanePtr build_quasifield_plane(const QuasifieldTable& t, std::string name) {
  const auto report = validate_quasifield(t, 1);
  if (!report.ok) {
    throw Error(ErrorCode::ConstructionFailed,
                name + ": quasifield invalid: " + report.violations.front());
  }
  const unsigned q = t.order;
  // Points: affine (x,y) at x*q+y, then (m) at q*q+m, then (inf).
  // Lines: [m,b] at m*q+b, then x=c at q*q+c, then the line at infinity.
  const std::size_t n = q * q + q + 1;
  const std::size_t ideal_inf = q * q + q;
  std::vector<std::uint8_t> m(n * n, 0);
  auto set = [&](std::size_t point, std::size_t line) { m[point * n + line] = 1; };
  for (unsigned x = 0; x < q; ++x) {
    for (unsigned slope = 0; slope < q; ++slope) {
      for (unsigned b = 0; b < q; ++b) {
        const unsigned y = t.plus(t.times(x, slope), b);
        set(x * q + y, slope * q + b);
      }
    }
    for (unsigned y = 0; y < q; ++y) set(x * q + y, q * q + x);
  }
  for (unsigned slope = 0; slope < q; ++slope) {
    for (unsigned b = 0; b < q; ++b) set(q * q + slope, slope * q + b);
    set(q * q + slope, ideal_inf);
  }
  for (unsigned c = 0; c < q; ++c) set(ideal_inf, q * q + c);
  set(ideal_inf, ideal_inf);

  std::vector<std::string> pl(n), ll(n);
  for (unsigned x = 0; x < q; ++x) {
    for (unsigned y = 0; y < q; ++y) pl[x * q + y] = "(" + s(x) + "," + s(y) + ")";
  }
  for (unsigned k = 0; k < q; ++k) pl[q * q + k] = "(" + s(k) + ")";
  pl[ideal_inf] = "(inf)";
  for (unsigned slope = 0; slope < q; ++slope) {
    for (unsigned b = 0; b < q; ++b) ll[slope * q + b] = "[" + s(slope) + "," + s(b) + "]";
  }
  for (unsigned c = 0; c < q; ++c) ll[q * q + c] = "[x=" + s(c) + "]";
  ll[ideal_inf] = "[inf]";

  try {
    return FinitePlane::create(IncidenceStructure(n, n, std::move(m)), std::move(name),
                               std::move(pl), std::move(ll));
  } catch (const Error& e) {
    throw Error(ErrorCode::ConstructionFailed, e.what());
  }
}

FinitePlanePtr build_hall9() { return build_quasifield_plane(hall9_quasifield(), "hall9"); }

std::string quasifield_csv(const QuasifieldTable& t) {
  std::ostringstream out;
  out << "op,a,b,result\n";
  for (unsigned a = 0; a < t.order; ++a) {
    for (unsigned b = 0; b < t.order; ++b) out << "add," << a << ',' << b << ',' << unsigned{t.plus(a, b)} << '\n';
  }
  for (unsigned a = 0; a < t.order; ++a) {
    for (unsigned b = 0; b < t.order; ++b) out << "mul," << a << ',' << b << ',' << unsigned{t.times(a, b)} << '\n';
  }
  return out.str();
}

}  // namespace incidence
