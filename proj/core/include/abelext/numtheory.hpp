#pragma once

#include <cstdint>
#include <vector>

namespace abelext {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
bool is_prime(std::uint64_t n);
std::int64_t smallest_prime_factor(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);  // distinct, ascending
std::vector<std::int64_t> primes_up_to(std::int64_t n);

// Squarefree part of |n| with the sign of n carried along.
std::int64_t squarefree_kernel(std::int64_t n);

// Kronecker/Jacobi symbol (a|n) for odd n > 0; handles negative a.
int jacobi(std::int64_t a, std::int64_t n);

// Least positive g that generates the units modulo p and modulo p^2 (and
// therefore modulo every p^k), for an odd prime p.
std::int64_t primitive_root(std::int64_t p);

// Discrete log in the cyclic group <base> of known order `order` modulo
// `mod`: returns e in [0, order) with base^e = target, or -1 if none.
// Direct scan for small orders, baby-step giant-step above.
std::int64_t discrete_log(std::uint64_t base, std::uint64_t target,
                          std::uint64_t order, std::uint64_t mod);

// Fundamental discriminant of Q(sqrt(n)) for squarefree-kernel input;
// returns 0 for square n (the rational field).
std::int64_t fundamental_discriminant(std::int64_t n);

bool is_fundamental_discriminant(std::int64_t d);

}  // namespace abelext
