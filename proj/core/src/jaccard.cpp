#include "curvkit/jaccard.hpp"

namespace curvkit {

Rational jaccard_coefficient(const NeighborhoodPartition& p) {
  return {p.common, p.union_size};
}

Rational jc_exact(const NeighborhoodPartition& p) {
  return Rational(-2) + Rational(3) * jaccard_coefficient(p);
}

double jc(const NeighborhoodPartition& p) { return to_double(jc_exact(p)); }

Rational gjc_exact(const NeighborhoodPartition& p) {
  const std::int64_t n = p.union_size;
  return Rational(1) - Rational(p.s1() + 2, n) - Rational(2 * p.s2(), n) -
         Rational(3 * p.s3(), n);
}

double gjc(const NeighborhoodPartition& p) { return to_double(gjc_exact(p)); }

double gjc_parametric(const GjcParams& params, const NeighborhoodPartition& p) {
  const double n = static_cast<double>(p.union_size);
  return params.alpha + params.beta * static_cast<double>(p.common) / n +
         params.gamma * static_cast<double>(p.s1() + 2) / n +
         params.delta * static_cast<double>(p.s2()) / n +
         params.zeta * static_cast<double>(p.s3()) / n;
}

Rational exchange_cost(const NeighborhoodPartition& p) {
  // Common nodes ship nothing; i -> j and j -> i cost one hop each.
  const std::int64_t hops = 2 + 1 * p.s1() + 2 * p.s2() + 3 * p.s3();
  return {hops, p.union_size};
}

}  // namespace curvkit
