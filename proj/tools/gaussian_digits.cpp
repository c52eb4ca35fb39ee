// Digits of xi = (sqrt(21) - 3)/6 in base beta = -1 + i, two at a time.
//
// With z the current remainder (z_0 = xi, z_{n+1} = beta z_n - t_{n+1}) and
// w = beta^2 z = -2i z, the pair
//   t_{n+1} = round(Im w),  t_{n+2} = round(Re w) + t_{n+1}
// leaves z_{n+2} = w + t_{n+1} - t_{n+2} - i t_{n+1} in [-1/2, 1/2]^2, so |t| <= 2.
//
// z is kept exactly as (a + b r + i (c + d r)) / 6 with r = sqrt(21); only the
// rounding decisions use a fixed-point approximation of r.

#include <gmpxx.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

// floor(num / den + 1/2) for den > 0.
mpz_class round_div(const mpz_class& num, const mpz_class& den) {
  mpz_class q;
  mpz_class twice = 2 * num + den;
  mpz_class twice_den = 2 * den;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), twice_den.get_mpz_t());
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: gaussian_digits COUNT OUTPUT\n";
    return 2;
  }
  const long count = std::strtol(argv[1], nullptr, 10);
  if (count <= 0) {
    std::cerr << "COUNT must be positive\n";
    return 2;
  }
  const std::string out_path = argv[2];

  // |b|, |d| double every pair step; keep 64 guard bits past the final size.
  const unsigned long frac_bits = static_cast<unsigned long>(count / 2 + 128);
  mpz_class scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), frac_bits);
  mpz_class root21;
  mpz_class radicand = 21 * scale * scale;
  mpz_sqrt(root21.get_mpz_t(), radicand.get_mpz_t());

  mpz_class a = -3, b = 1, c = 0, d = 0;
  const mpz_class three_scaled = 3 * scale;
  std::vector<long> digits;
  digits.reserve(static_cast<std::size_t>(count) + 1);
  while (static_cast<long>(digits.size()) < count) {
    const mpz_class re_num = a * scale + b * root21;  // ~ 6 Re z * 2^frac_bits
    const mpz_class im_num = c * scale + d * root21;  // ~ 6 Im z * 2^frac_bits
    const mpz_class t1 = round_div(-re_num, three_scaled);  // Im w = -2 Re z
    const mpz_class t2 = round_div(im_num, three_scaled) + t1;  // Re w = 2 Im z
    const mpz_class next_a = 2 * c + 6 * (t1 - t2);
    const mpz_class next_b = 2 * d;
    const mpz_class next_c = -2 * a - 6 * t1;
    const mpz_class next_d = -2 * b;
    a = next_a;
    b = next_b;
    c = next_c;
    d = next_d;
    digits.push_back(t1.get_si());
    digits.push_back(t2.get_si());
  }
  digits.resize(static_cast<std::size_t>(count));

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 1;
  }
  out << "# T=2\n# beta = -1 + i, xi = (sqrt(21) - 3)/6, pairwise rounding\n";
  for (long t : digits) {
    if (t < -2 || t > 2) {
      std::cerr << "digit " << t << " exceeds the bound 2\n";
      return 1;
    }
    out << t << '\n';
  }
  return out ? 0 : 1;
}
