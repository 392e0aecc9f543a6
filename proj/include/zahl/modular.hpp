#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zahl/arithfun.hpp"
#include "zahl/euclid.hpp"
#include "zahl/factor.hpp"
#include "zahl/integer.hpp"

namespace zahl {

// Value in [0, n) together with its modulus.
struct Residue {
    Integer value;
    Integer modulus;

    Residue(Integer v, Integer n) : value(std::move(v)), modulus(std::move(n)) {
        if (modulus < 1) throw std::domain_error("Residue: modulus must be >= 1");
        value = floor_div(value, modulus).r;
    }

    friend bool operator==(const Residue& x, const Residue& y) {
        return x.value == y.value && x.modulus == y.modulus;
    }
};

inline Integer mod_inverse_value(const Integer& a, const Integer& n) {
    Bezout bz = bezout(a, n);
    if (bz.g != 1)
        throw std::domain_error("mod_inverse: not invertible, gcd = " + bz.g.str());
    return floor_div(bz.lambda, n).r;
}

inline Residue mod_inverse(const Integer& a, const Integer& n) {
    if (n < 1) throw std::domain_error("mod_inverse: modulus must be >= 1");
    if (n == 1) return Residue(0, 1);
    return Residue(mod_inverse_value(a, n), n);
}

// a^e mod n by square-and-multiply; negative exponents go through the inverse.
inline Residue mod_pow(const Integer& a, const Integer& e, const Integer& n) {
    if (n < 1) throw std::domain_error("mod_pow: modulus must be >= 1");
    Integer base = floor_div(a, n).r;
    Integer exp = e;
    if (exp < 0) {
        base = mod_inverse_value(a, n);  // requires gcd(a, n) = 1
        exp = -exp;
    }
    Integer result = floor_div(Integer(1), n).r;
    while (exp > 0) {
        if (exp % 2 == 1) result = result * base % n;
        base = base * base % n;
        exp /= 2;
    }
    return Residue(result, n);
}

// Simultaneous congruences x = a_i (n_i) for pairwise coprime moduli;
// unique solution mod prod n_i.
inline Residue crt(const std::vector<std::pair<Integer, Integer>>& congruences) {
    if (congruences.empty()) throw std::domain_error("crt: no congruences");
    for (const auto& [a, n] : congruences)
        if (n < 1) throw std::domain_error("crt: moduli must be >= 1");
    for (std::size_t i = 0; i < congruences.size(); ++i)
        for (std::size_t j = i + 1; j < congruences.size(); ++j) {
            Integer g = gcd(congruences[i].second, congruences[j].second);
            if (g != 1)
                throw std::domain_error("crt: moduli " + congruences[i].second.str() + " and " +
                                        congruences[j].second.str() +
                                        " are not coprime, gcd = " + g.str());
        }
    Integer x = floor_div(congruences[0].first, congruences[0].second).r;
    Integer mod = congruences[0].second;
    for (std::size_t i = 1; i < congruences.size(); ++i) {
        const auto& [a_i, n_i] = congruences[i];
        // x + mod*k = a_i (n_i)  =>  k = (a_i - x) * mod^{-1} (n_i)
        Integer k = floor_div((a_i - x) * mod_inverse_value(mod, n_i), n_i).r;
        x += mod * k;
        mod *= n_i;
        x = floor_div(x, mod).r;
    }
    return Residue(x, mod);
}

// Least h >= 1 with a^h = 1 (n), found by peeling prime factors off phi(n).
inline Integer order(const Integer& a, const Integer& n) {
    if (n < 1) throw std::domain_error("order: modulus must be >= 1");
    if (gcd(a, n) != 1) throw std::domain_error("order: gcd(a, n) != 1");
    if (n == 1) return 1;
    Integer h = phi(n);
    for (const PrimePower& pp : factorize(h)) {
        for (unsigned e = 0; e < pp.alpha; ++e) {
            if (mod_pow(a, h / pp.p, n).value == 1)
                h /= pp.p;
            else
                break;
        }
    }
    return h;
}

inline bool is_primitive_root(const Integer& a, const Integer& n) {
    if (n < 1) throw std::domain_error("is_primitive_root: modulus must be >= 1");
    if (gcd(a, n) != 1) return false;
    return order(a, n) == phi(n);
}

// Primitive roots exist exactly for n = 1, 2, 4, p^beta, 2 p^beta with p odd.
inline bool primitive_root_exists(const Integer& n) {
    if (n < 1) throw std::domain_error("primitive_root_exists: modulus must be >= 1");
    if (n <= 4) return true;
    Integer m = n;
    int twos = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++twos;
    }
    if (twos > 1) return false;
    auto fs = factorize(m);
    return fs.size() == 1 && fs[0].p > 2;
}

// Smallest positive primitive root when one exists (0 for the modulus 1).
inline std::optional<Integer> primitive_root(const Integer& n) {
    if (n < 1) throw std::domain_error("primitive_root: modulus must be >= 1");
    if (!primitive_root_exists(n)) return std::nullopt;
    if (n == 1) return Integer(0);
    for (Integer a = 1; a < n; ++a) {
        if (gcd(a, n) != 1) continue;
        if (order(a, n) == phi(n)) return a;
    }
    throw std::logic_error("primitive_root: no root found in admissible family");
}

// {0 <= k < n : gcd(k, n) = 1}; the modulus 1 contributes {0}.
inline std::vector<Integer> reduced_residues(const Integer& n) {
    if (n < 1) throw std::domain_error("reduced_residues: modulus must be >= 1");
    if (n == 1) return {Integer(0)};
    std::vector<Integer> out;
    for (Integer k = 1; k < n; ++k)
        if (gcd(k, n) == 1) out.push_back(k);
    return out;
}

inline std::vector<Integer> complete_residues(const Integer& n) {
    if (n < 1) throw std::domain_error("complete_residues: modulus must be >= 1");
    std::vector<Integer> out;
    for (Integer k = 0; k < n; ++k) out.push_back(k);
    return out;
}

}  // namespace zahl
