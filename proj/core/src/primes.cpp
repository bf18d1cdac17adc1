#include "np/primes.hpp"

#include "np/error.hpp"

namespace np {

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = lo < 2 ? 2 : lo; p < hi; ++p)
    if (is_prime(Integer(static_cast<unsigned long>(p)))) out.push_back(p);
  return out;
}

Integer euler_phi(const Integer& n) {
  if (n < 1) fail(ErrorKind::DegenerateInput, "euler_phi of a non-positive integer");
  Integer m = n, result = n;
  for (Integer f = 2; f * f <= m; ++f) {
    if (m % f != 0) continue;
    while (m % f == 0) m /= f;
    result -= result / f;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::uint64_t multiplicative_order(const Integer& m, const Integer& n) {
  if (n < 1) fail(ErrorKind::DegenerateInput, "multiplicative_order: modulus must be positive");
  if (gcd(m, n) != 1) fail(ErrorKind::NotCoprime, "multiplicative_order: " + m.get_str() + " is not a unit mod " + n.get_str());
  const Integer base = mod(m, n);
  Integer x = mod(base, n);
  const Integer one = mod(Integer(1), n);
  std::uint64_t d = 1;
  while (x != one) {
    x = x * base % n;
    ++d;
  }
  return d;
}

}  // namespace np
