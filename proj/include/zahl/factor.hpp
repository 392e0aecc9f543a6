#pragma once

#include <stdexcept>
#include <vector>

#include "zahl/integer.hpp"

namespace zahl {

struct PrimePower {
    Integer p;
    unsigned alpha = 0;

    friend bool operator==(const PrimePower& x, const PrimePower& y) {
        return x.p == y.p && x.alpha == y.alpha;
    }
};

// Trial division. Desk-scale inputs only: O(sqrt(n)).
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    Integer d = 5;
    while (d * d <= n) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
        d += 6;
    }
    return true;
}

// Canonical factorization n = p_1^a_1 * ... with strictly ascending primes.
// factorize(1) is the empty product.
inline std::vector<PrimePower> factorize(Integer n) {
    if (n < 1) throw std::domain_error("factorize: argument must be >= 1");
    std::vector<PrimePower> out;
    auto strip = [&](const Integer& p) {
        unsigned alpha = 0;
        while (n % p == 0) {
            n /= p;
            ++alpha;
        }
        if (alpha > 0) out.push_back({p, alpha});
    };
    strip(2);
    strip(3);
    Integer d = 5;
    while (d * d <= n) {
        strip(d);
        strip(d + 2);
        d += 6;
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

// All positive divisors of n, ascending.
inline std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> out{1};
    for (const PrimePower& pp : factorize(n)) {
        std::size_t base = out.size();
        Integer pk = 1;
        for (unsigned e = 1; e <= pp.alpha; ++e) {
            pk *= pp.p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Number of distinct prime factors; omega(1) = 0.
inline unsigned omega(const Integer& n) {
    if (n < 1) throw std::domain_error("omega: argument must be >= 1");
    return static_cast<unsigned>(factorize(n).size());
}

inline bool is_squarefree(const Integer& n) {
    if (n < 1) throw std::domain_error("is_squarefree: argument must be >= 1");
    for (const PrimePower& pp : factorize(n))
        if (pp.alpha > 1) return false;
    return true;
}

// Largest alpha with p^alpha | n!, via alpha_p(n) = sum_k floor(n / p^k).
inline Integer factorial_prime_exponent(const Integer& p, const Integer& n) {
    if (!is_prime(p)) throw std::domain_error("factorial_prime_exponent: p must be prime");
    if (n < 0) throw std::domain_error("factorial_prime_exponent: n must be >= 0");
    Integer sum = 0;
    Integer pk = p;
    while (pk <= n) {
        sum += n / pk;
        pk *= p;
    }
    return sum;
}

}  // namespace zahl
