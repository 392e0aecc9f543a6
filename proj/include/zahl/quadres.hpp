#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zahl/factor.hpp"
#include "zahl/integer.hpp"
#include "zahl/modular.hpp"

namespace zahl {

// Legendre symbol by the Euler criterion: (a|p) = a^{(p-1)/2} mod p.
inline int legendre(const Integer& a, const Integer& p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::domain_error("legendre: modulus must be an odd prime");
    Integer e = mod_pow(a, (p - 1) / 2, p).value;
    if (e == 0) return 0;
    return e == 1 ? 1 : -1;
}

// Same symbol by counting least positive residues of a, 2a, ..., ((p-1)/2)a
// exceeding p/2.
inline int legendre_gauss(const Integer& a, const Integer& p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::domain_error("legendre_gauss: modulus must be an odd prime");
    if (gcd(a, p) != 1) throw std::domain_error("legendre_gauss: gcd(a, p) != 1");
    Integer t = 0;
    Integer half = (p - 1) / 2;
    Integer r = 0;
    Integer step = floor_div(a, p).r;
    for (Integer j = 1; j <= half; ++j) {
        r += step;
        if (r >= p) r -= p;
        if (2 * r > p) ++t;
    }
    return t % 2 == 0 ? 1 : -1;
}

// Jacobi symbol (P|Q) for odd Q >= 1 by the reciprocity loop; no
// factorization. Returns 0 when gcd(P, Q) > 1.
inline int jacobi(const Integer& P, const Integer& Q) {
    if (Q < 1 || Q % 2 == 0) throw std::domain_error("jacobi: modulus must be odd and positive");
    Integer a = floor_div(P, Q).r;
    Integer q = Q;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            Integer m = q % 8;
            if (m == 3 || m == 5) result = -result;
        }
        std::swap(a, q);
        if (a % 4 == 3 && q % 4 == 3) result = -result;
        a = a % q;
    }
    return q == 1 ? result : 0;
}

// Both square roots of a mod an odd prime, or absent for a non-residue.
// p = 3 (4) and p = 5 (8) use the closed forms; p = 1 (8) falls back to a
// deterministic search over 1..(p-1)/2.
inline std::optional<std::pair<Integer, Integer>> sqrt_mod_prime(const Integer& a,
                                                                 const Integer& p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::domain_error("sqrt_mod_prime: modulus must be an odd prime");
    Integer r = floor_div(a, p).r;
    if (r == 0) return std::make_pair(Integer(0), Integer(0));
    if (legendre(a, p) == -1) return std::nullopt;

    Integer x;
    if (p % 4 == 3) {
        x = mod_pow(r, (p + 1) / 4, p).value;
    } else if (p % 8 == 5) {
        x = mod_pow(r, (p + 3) / 8, p).value;
        if (x * x % p != r) x = x * mod_pow(2, (p - 1) / 4, p).value % p;
    } else {
        for (x = 1; 2 * x <= p - 1; ++x)
            if (x * x % p == r) break;
    }
    if (x * x % p != r) throw std::logic_error("sqrt_mod_prime: no root found for a residue");
    Integer y = p - x;
    if (x > y) std::swap(x, y);
    return std::make_pair(x, y);
}

// Roots of x^2 = a mod p^alpha for odd prime p, gcd(a, p) = 1, by the
// quadratically converging lift 2 x_n x_{n+1} = x_n^2 + a (p^{2^{n+1}}).
inline std::optional<std::pair<Integer, Integer>> lift_sqrt_prime_power(const Integer& a,
                                                                        const Integer& p,
                                                                        unsigned alpha) {
    if (alpha < 1) throw std::domain_error("lift_sqrt_prime_power: alpha must be >= 1");
    if (gcd(a, p) != 1) throw std::domain_error("lift_sqrt_prime_power: gcd(a, p) != 1");
    auto base = sqrt_mod_prime(a, p);
    if (!base) return std::nullopt;

    Integer modulus = p;
    unsigned covered = 1;  // current power of p
    Integer x = base->first;
    while (covered < alpha) {
        unsigned next = std::min(2 * covered, alpha);
        Integer next_modulus = modulus;
        for (unsigned e = covered; e < next; ++e) next_modulus *= p;
        x = floor_div((x * x + a) * mod_inverse_value(2 * x, next_modulus), next_modulus).r;
        modulus = next_modulus;
        covered = next;
    }
    Integer y = modulus - x;
    if (x > y) std::swap(x, y);
    return std::make_pair(x, y);
}

// Roots of x^2 = a mod 2^alpha for odd a. One root mod 2, two mod 4 when
// a = 1 (4), four mod 2^alpha >= 8 exactly when a = 1 (8).
inline std::optional<std::vector<Integer>> sqrt_mod_pow2(const Integer& a, unsigned alpha) {
    if (alpha < 1) throw std::domain_error("sqrt_mod_pow2: alpha must be >= 1");
    if (a % 2 == 0) throw std::domain_error("sqrt_mod_pow2: a must be odd");
    if (alpha == 1) return std::vector<Integer>{1};
    Integer mod4 = floor_div(a, 4).r;
    if (alpha == 2) {
        if (mod4 != 1) return std::nullopt;
        return std::vector<Integer>{1, 3};
    }
    if (floor_div(a, 8).r != 1) return std::nullopt;

    Integer modulus = 8;
    Integer x = 1;
    for (unsigned k = 3; k < alpha; ++k) {
        // lift from 2^k to 2^{k+1} with the correction x += lambda 2^{k-1}
        Integer t = floor_div(x * x - a, modulus).q;
        if (t % 2 != 0) x += modulus / 2;
        modulus *= 2;
    }
    modulus = Integer(1) << alpha;
    Integer half = modulus / 2;
    std::vector<Integer> roots{floor_div(x, modulus).r, floor_div(-x, modulus).r,
                               floor_div(x + half, modulus).r, floor_div(-x + half, modulus).r};
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace detail {

inline bool sqrt_solvable(const Integer& a, const std::vector<PrimePower>& fs) {
    for (const PrimePower& pp : fs) {
        if (pp.p == 2) {
            if (pp.alpha == 2 && floor_div(a, 4).r != 1) return false;
            if (pp.alpha >= 3 && floor_div(a, 8).r != 1) return false;
        } else if (legendre(a, pp.p) != 1) {
            return false;
        }
    }
    return true;
}

}  // namespace detail

// All solutions of x^2 = a (m) for gcd(a, m) = 1, assembled from the
// prime-power solvers through the Chinese remainder theorem. Sorted; empty
// when a is a non-residue.
inline std::vector<Integer> sqrt_mod(const Integer& a, const Integer& m) {
    if (m < 2) throw std::domain_error("sqrt_mod: modulus must be >= 2");
    if (gcd(a, m) != 1) throw std::domain_error("sqrt_mod: gcd(a, m) != 1");
    auto fs = factorize(m);
    if (!detail::sqrt_solvable(a, fs)) return {};

    // per-prime-power root lists
    std::vector<Integer> moduli;
    std::vector<std::vector<Integer>> lists;
    for (const PrimePower& pp : fs) {
        Integer q = 1;
        for (unsigned e = 0; e < pp.alpha; ++e) q *= pp.p;
        moduli.push_back(q);
        if (pp.p == 2) {
            lists.push_back(*sqrt_mod_pow2(a, pp.alpha));
        } else {
            auto roots = lift_sqrt_prime_power(a, pp.p, pp.alpha);
            lists.push_back({roots->first, roots->second});
        }
    }

    std::vector<Integer> out{0};
    Integer mod_done = 1;
    for (std::size_t i = 0; i < lists.size(); ++i) {
        std::vector<Integer> next;
        for (const Integer& x : out)
            for (const Integer& r : lists[i])
                next.push_back(crt({{x, mod_done}, {r, moduli[i]}}).value);
        out = std::move(next);
        mod_done *= moduli[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Closed-form solution count min(4, 2^{max(alpha,1)-1}) * 2^{omega(m')} when
// solvable, 0 otherwise.
inline Integer count_sqrt_solutions(const Integer& a, const Integer& m) {
    if (m < 2) throw std::domain_error("count_sqrt_solutions: modulus must be >= 2");
    if (gcd(a, m) != 1) throw std::domain_error("count_sqrt_solutions: gcd(a, m) != 1");
    auto fs = factorize(m);
    if (!detail::sqrt_solvable(a, fs)) return 0;
    unsigned alpha = 0;
    Integer count = 1;
    for (const PrimePower& pp : fs) {
        if (pp.p == 2)
            alpha = pp.alpha;
        else
            count *= 2;
    }
    unsigned two_exp = std::max(alpha, 1u) - 1;
    Integer two_part = two_exp >= 2 ? 4 : (Integer(1) << two_exp);
    return two_part * count;
}

// Closed congruence-class criteria for small a; agrees with legendre(a, p).
inline bool qr_condition(const Integer& a, const Integer& p) {
    if (p < 3 || !is_prime(p)) throw std::domain_error("qr_condition: p must be an odd prime");
    auto residue_in = [&](long long mod, std::initializer_list<long long> set) {
        Integer r = floor_div(p, mod).r;
        for (long long v : set)
            if (r == v) return true;
        return false;
    };
    if (a == -1) return residue_in(4, {1});
    if (a == 2) return residue_in(8, {1, 7});
    if (a == -2) return residue_in(8, {1, 3});
    if (a == 3 || a == -3) {
        if (p == 3) throw std::domain_error("qr_condition: p divides a");
        return a == 3 ? residue_in(12, {1, 11}) : residue_in(3, {1});
    }
    if (a == 5 || a == -5) {
        if (p == 5) throw std::domain_error("qr_condition: p divides a");
        return a == 5 ? residue_in(10, {1, 9}) : residue_in(20, {1, 3, 7, 9});
    }
    if (a == 6 || a == -6) {
        if (p == 3) throw std::domain_error("qr_condition: p divides a");
        return a == 6 ? residue_in(24, {1, 5, 19, 23}) : residue_in(24, {1, 5, 7, 11});
    }
    throw std::domain_error("qr_condition: unsupported value of a");
}

}  // namespace zahl
