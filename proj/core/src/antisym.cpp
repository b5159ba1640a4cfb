#include "flopwall/antisym.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace flopwall::wallcross {

namespace {

int permutation_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// v_i - v_j
MultiPoly diff(int m, int i, int j) {
  std::vector<Rational> c(m, Rational(0));
  c[i] += Rational(1);
  c[j] -= Rational(1);
  return MultiPoly::linear(c);
}

Rational random_rational(std::mt19937_64& rng) {
  long p = static_cast<long>(rng() % 201) - 100;
  long q = static_cast<long>(rng() % 60) + 1;
  return Rational(p, q);
}

}  // namespace

MultiPoly antisym_lhs(int r) {
  const int m = 2 * r;
  MultiPoly out = MultiPoly::constant(m, Rational(1));
  for (int i = 0; i < r; ++i)
    for (int l = 0; l < i; ++l) out = out * diff(m, r + i, r + l) * diff(m, l, i);
  return out;
}

MultiPoly antisym_rhs(int r) {
  const int m = 2 * r;
  MultiPoly out(m);
  std::vector<int> sigma(r);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    MultiPoly term = MultiPoly::constant(m, Rational(permutation_sign(sigma)));
    for (int l = 0; l < r; ++l)
      for (int j = 0; j < r; ++j)
        if (j != sigma[l]) term = term * diff(m, j, r + l);
    out += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Rational antisym_lhs_value(int r, const std::vector<Rational>& x, const std::vector<Rational>& z) {
  Rational v(1);
  for (int i = 0; i < r; ++i)
    for (int l = 0; l < i; ++l) v *= (z[i] - z[l]) * (x[l] - x[i]);
  return v;
}

Rational antisym_rhs_value(int r, const std::vector<Rational>& x, const std::vector<Rational>& z) {
  Rational sum(0);
  std::vector<int> sigma(r);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    Rational t(permutation_sign(sigma));
    for (int l = 0; l < r; ++l)
      for (int j = 0; j < r; ++j)
        if (j != sigma[l]) t *= x[j] - z[l];
    sum += t;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum;
}

AntisymReport antisym_identity_check(int r, int samples, std::uint64_t seed, int symbolic_max_r) {
  AntisymReport rep;
  rep.r = r;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> x, z;
    for (int i = 0; i < r; ++i) x.push_back(random_rational(rng));
    for (int i = 0; i < r; ++i) z.push_back(random_rational(rng));
    ++rep.samples;
    if (antisym_lhs_value(r, x, z) != antisym_rhs_value(r, x, z)) ++rep.sample_failures;
  }
  if (r <= symbolic_max_r) {
    rep.symbolic_checked = true;
    MultiPoly lhs = antisym_lhs(r), rhs = antisym_rhs(r);
    rep.symbolic_equal = (lhs == rhs);
    numkernel::Exponent lead(2 * r, 0);
    for (int i = 0; i < r; ++i) lead[i] = lead[r + i] = i;
    Rational expected((r * (r - 1) / 2) % 2 == 0 ? 1 : -1);
    rep.leading_coefficient_ok = lhs.coefficient(lead) == expected && rhs.coefficient(lead) == expected;
  }
  return rep;
}

}  // namespace flopwall::wallcross
