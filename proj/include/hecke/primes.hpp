#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hecke {

/// Primes p <= limit, sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// The first n primes.
std::vector<std::uint64_t> first_primes(std::size_t n);

/// Trial division; fine for the sizes the CSV reader sees.
bool is_prime(std::uint64_t n);

}  // namespace hecke
