#include "jetline/random.hpp"

namespace jetline {

Rational Rng::nonzero_rational(long max_abs, long max_den) {
  long p = uniform(1, max_abs);
  if (uniform(0, 1)) p = -p;
  return Rational(p, uniform(1, max_den));
}

Mobius Rng::mobius() {
  const Mobius t = Mobius::translation(rational());
  const Rational c = rational();
  const Mobius lower(1, 0, c, 1);
  const Mobius s = Mobius::scaling(nonzero_rational(3, 2));
  return t * lower * s;
}

Poly Rng::poly(int max_degree) {
  std::vector<Rational> c;
  const int deg = static_cast<int>(uniform(0, max_degree));
  for (int i = 0; i <= deg; ++i) c.push_back(rational());
  return Poly(c);
}

BinaryForm Rng::form(int degree) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(rational());
  return BinaryForm(degree, c);
}

}  // namespace jetline
