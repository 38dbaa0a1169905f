#include "hecke/primes.hpp"

#include <algorithm>
#include <cmath>

namespace hecke {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::uint64_t> first_primes(std::size_t n) {
  if (n == 0) return {};
  // p_n < n (ln n + ln ln n) for n >= 6
  const double x = static_cast<double>(std::max<std::size_t>(n, 6));
  const auto limit = static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 16;
  auto primes = primes_up_to(limit);
  primes.resize(n);
  return primes;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace hecke
