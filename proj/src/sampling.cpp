#include "incidence/sampling.hpp"

namespace incidence {

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  // Rejection on the largest multiple of n keeps the draw unbiased and
  // identical across standard libraries.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
  // splitmix64 finalizer over (seed, block).
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + block + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rational random_rational(Rng& rng) {
  const long num = static_cast<long>(uniform_below(rng, 2 * kSampleBound + 1)) - kSampleBound;
  const long den = static_cast<long>(uniform_below(rng, kSampleBound)) + 1;
  return make_rational(num, den);
}

PointRef random_point(const FinitePlane& pl, Rng& rng) {
  return pl.point(uniform_below(rng, pl.n_points()));
}

PointRef random_point_on(const FinitePlane& pl, LineRef l, Rng& rng) {
  const auto pts = pl.points_on(l);
  return pts[uniform_below(rng, pts.size())];
}

LineRef random_line_through(const FinitePlane& pl, PointRef p, Rng& rng) {
  const auto lines = pl.lines_through(p);
  return lines[uniform_below(rng, lines.size())];
}

MoultonPoint random_point(const MoultonPlane&, Rng& rng) {
  auto x = random_rational(rng);
  auto y = random_rational(rng);
  return affine(std::move(x), std::move(y));
}

MoultonPoint random_point_on(const MoultonPlane& pl, const MoultonLine& l, Rng& rng) {
  if (const auto* v = std::get_if<VerticalLine>(&l)) return affine(v->x0, random_rational(rng));
  if (std::holds_alternative<LineAtInfinity>(l)) {
    if (uniform_below(rng, 2 * kSampleBound) == 0) return ideal_vertical();
    return ideal(random_rational(rng));
  }
  // Solve for y by meeting with the vertical line at a random abscissa.
  return pl.meet(l, VerticalLine{random_rational(rng)});
}

MoultonLine random_line_through(const MoultonPlane& pl, const MoultonPoint& p, Rng& rng) {
  for (;;) {
    auto q = random_point(pl, rng);
    if (!(q == p)) return pl.join(p, q);
  }
}

}  // namespace incidence
