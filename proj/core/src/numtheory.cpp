#include "abelext/numtheory.hpp"

#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace abelext {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) return 0;
    unsigned __int128 result = 1, b = base % mod;
    while (exp > 0) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    // deterministic Miller-Rabin bases for 64-bit inputs
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::int64_t smallest_prime_factor(std::int64_t n) {
    if (n < 2) throw std::domain_error("no prime factor");
    if (n % 2 == 0) return 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return d;
    return n;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> ps;
    n = std::llabs(n);
    while (n > 1) {
        std::int64_t p = smallest_prime_factor(n);
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    return ps;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return primes;
}

std::int64_t squarefree_kernel(std::int64_t n) {
    if (n == 0) return 0;
    std::int64_t sign = n < 0 ? -1 : 1;
    std::int64_t m = std::llabs(n), kernel = 1;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        int e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        if (e % 2) kernel *= d;
    }
    return sign * kernel * m;
}

int jacobi(std::int64_t a, std::int64_t n) {
    if (n <= 0 || n % 2 == 0) throw std::invalid_argument("jacobi needs odd positive n");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

std::int64_t primitive_root(std::int64_t p) {
    if (p == 2) throw std::invalid_argument("primitive_root expects an odd prime");
    auto qs = prime_factors(p - 1);
    for (std::int64_t g = 2;; ++g) {
        bool ok = true;
        for (std::int64_t q : qs)
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (!ok) continue;
        // must stay primitive mod p^2, i.e. g^(p-1) != 1 mod p^2
        std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
        if (pow_mod(g, p - 1, p2) != 1) return g;
    }
}

std::int64_t discrete_log(std::uint64_t base, std::uint64_t target,
                          std::uint64_t order, std::uint64_t mod) {
    target %= mod;
    if (order < (1u << 16)) {
        std::uint64_t x = 1 % mod;
        for (std::uint64_t e = 0; e < order; ++e) {
            if (x == target) return static_cast<std::int64_t>(e);
            x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * base % mod);
        }
        return -1;
    }
    // baby-step giant-step
    std::uint64_t m = 1;
    while (m * m < order) ++m;
    std::unordered_map<std::uint64_t, std::uint64_t> table;
    table.reserve(m);
    std::uint64_t x = 1 % mod;
    for (std::uint64_t j = 0; j < m; ++j) {
        table.emplace(x, j);
        x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * base % mod);
    }
    std::uint64_t inv_gm = pow_mod(base, order - m % order, mod);  // base^{-m}
    std::uint64_t gamma = target;
    for (std::uint64_t i = 0; i <= m; ++i) {
        auto it = table.find(gamma);
        if (it != table.end()) {
            std::uint64_t e = i * m + it->second;
            if (e < order) return static_cast<std::int64_t>(e);
        }
        gamma = static_cast<std::uint64_t>(static_cast<unsigned __int128>(gamma) * inv_gm % mod);
    }
    return -1;
}

std::int64_t fundamental_discriminant(std::int64_t n) {
    std::int64_t s = squarefree_kernel(n);
    if (s == 1 || s == 0) return 0;
    std::int64_t rem = ((s % 4) + 4) % 4;
    return rem == 1 ? s : 4 * s;
}

bool is_fundamental_discriminant(std::int64_t d) {
    if (d == 0 || d == 1) return false;
    std::int64_t rem = ((d % 4) + 4) % 4;
    if (rem == 1) return squarefree_kernel(d) == d;
    if (rem != 0) return false;
    std::int64_t m = d / 4;
    std::int64_t mrem = ((m % 4) + 4) % 4;
    return (mrem == 2 || mrem == 3) && squarefree_kernel(m) == m;
}

}  // namespace abelext
