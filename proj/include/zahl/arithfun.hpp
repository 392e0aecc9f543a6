#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "zahl/factor.hpp"
#include "zahl/integer.hpp"
#include "zahl/rational.hpp"

namespace zahl {

// Pointwise values of the standard arithmetic functions.

inline Integer mu(const Integer& n) {
    if (n < 1) throw std::domain_error("mu: argument must be >= 1");
    auto fs = factorize(n);
    for (const auto& pp : fs)
        if (pp.alpha > 1) return 0;
    return fs.size() % 2 == 0 ? 1 : -1;
}

inline Integer phi(const Integer& n) {
    if (n < 1) throw std::domain_error("phi: argument must be >= 1");
    Integer out = 1;
    for (const auto& pp : factorize(n)) {
        Integer pk = 1;
        for (unsigned e = 1; e < pp.alpha; ++e) pk *= pp.p;
        out *= pk * (pp.p - 1);
    }
    return out;
}

// tau = 1 * 1, evaluated as the divisor count.
inline Integer tau(const Integer& n) {
    if (n < 1) throw std::domain_error("tau: argument must be >= 1");
    return Integer(divisors(n).size());
}

inline Integer epsilon(const Integer& n) {
    if (n < 1) throw std::domain_error("epsilon: argument must be >= 1");
    return n == 1 ? 1 : 0;
}

inline Integer one(const Integer& n) {
    if (n < 1) throw std::domain_error("one: argument must be >= 1");
    return 1;
}

inline Integer ident(const Integer& n) {
    if (n < 1) throw std::domain_error("ident: argument must be >= 1");
    return n;
}

// An arithmetic function tabulated on 1..N. Values are exact rationals so
// Dirichlet inversion stays closed; the built-ins are all integer-valued.
class ArithFn {
public:
    explicit ArithFn(std::size_t horizon) : values_(horizon + 1) {
        if (horizon < 1) throw std::domain_error("ArithFn: horizon must be >= 1");
    }

    static ArithFn tabulate(std::size_t horizon, const std::function<Rational(std::size_t)>& f) {
        ArithFn out(horizon);
        for (std::size_t n = 1; n <= horizon; ++n) out.values_[n] = f(n);
        return out;
    }

    std::size_t horizon() const { return values_.size() - 1; }

    const Rational& operator()(std::size_t n) const {
        if (n < 1 || n > horizon()) throw std::domain_error("ArithFn: index outside horizon");
        return values_[n];
    }

    Rational& at(std::size_t n) {
        if (n < 1 || n > horizon()) throw std::domain_error("ArithFn: index outside horizon");
        return values_[n];
    }

    friend bool operator==(const ArithFn& f, const ArithFn& g) { return f.values_ == g.values_; }

    friend ArithFn operator+(const ArithFn& f, const ArithFn& g) {
        if (f.horizon() != g.horizon()) throw std::domain_error("ArithFn: horizon mismatch");
        ArithFn out(f.horizon());
        for (std::size_t n = 1; n <= f.horizon(); ++n) out.values_[n] = f.values_[n] + g.values_[n];
        return out;
    }

private:
    std::vector<Rational> values_;  // index 0 unused
};

inline ArithFn mu_table(std::size_t N) {
    return ArithFn::tabulate(N, [](std::size_t n) { return Rational(mu(n)); });
}
inline ArithFn phi_table(std::size_t N) {
    return ArithFn::tabulate(N, [](std::size_t n) { return Rational(phi(n)); });
}
inline ArithFn epsilon_table(std::size_t N) {
    return ArithFn::tabulate(N, [](std::size_t n) { return Rational(n == 1 ? 1 : 0); });
}
inline ArithFn one_table(std::size_t N) {
    return ArithFn::tabulate(N, [](std::size_t) { return Rational(1); });
}
inline ArithFn ident_table(std::size_t N) {
    return ArithFn::tabulate(N, [](std::size_t n) { return Rational(Integer(n)); });
}

inline ArithFn dirichlet_convolve(const ArithFn& f, const ArithFn& g);

inline ArithFn tau_table(std::size_t N) { return dirichlet_convolve(one_table(N), one_table(N)); }

// (f*g)(n) = sum over d | n of f(d) g(n/d).
inline ArithFn dirichlet_convolve(const ArithFn& f, const ArithFn& g) {
    if (f.horizon() != g.horizon()) throw std::domain_error("dirichlet_convolve: horizon mismatch");
    std::size_t N = f.horizon();
    ArithFn out(N);
    for (std::size_t d = 1; d <= N; ++d)
        for (std::size_t m = d; m <= N; m += d) out.at(m) += f(d) * g(m / d);
    return out;
}

// Inverse under Dirichlet convolution, by the triangular recursion
// inv(1) = 1/f(1), inv(n) = -1/f(1) * sum over d | n, d < n of f(n/d) inv(d).
inline ArithFn dirichlet_inverse(const ArithFn& f) {
    if (f(1).is_zero()) throw std::domain_error("dirichlet_inverse: f(1) = 0 is not invertible");
    std::size_t N = f.horizon();
    ArithFn inv(N);
    std::vector<Rational> acc(N + 1);
    for (std::size_t n = 1; n <= N; ++n) {
        inv.at(n) = n == 1 ? f(1).reciprocal() : -acc[n] / f(1);
        for (std::size_t m = 2 * n; m <= N; m += n) acc[m] += f(m / n) * inv(n);
    }
    return inv;
}

// The unique f with f * 1 = g.
inline ArithFn mobius_invert(const ArithFn& g) {
    return dirichlet_convolve(mu_table(g.horizon()), g);
}

inline bool is_multiplicative(const ArithFn& f) {
    if (f.horizon() < 4) throw std::domain_error("is_multiplicative: horizon must be >= 4");
    if (f(1) != Rational(1)) return false;
    std::size_t N = f.horizon();
    for (std::size_t n1 = 2; n1 * n1 <= N; ++n1)
        for (std::size_t n2 = n1 + 1; n1 * n2 <= N; ++n2) {
            if (gcd(n1, n2) != 1) continue;
            if (f(n1 * n2) != f(n1) * f(n2)) return false;
        }
    return true;
}

inline bool is_completely_multiplicative(const ArithFn& f) {
    if (f.horizon() < 4) throw std::domain_error("is_completely_multiplicative: horizon must be >= 4");
    if (f(1) != Rational(1)) return false;
    std::size_t N = f.horizon();
    for (std::size_t n1 = 2; n1 * n1 <= N; ++n1)
        for (std::size_t n2 = n1; n1 * n2 <= N; ++n2)
            if (f(n1 * n2) != f(n1) * f(n2)) return false;
    return true;
}

// For completely multiplicative f the inverse is the pointwise product f*mu;
// checked by convolving back to epsilon.
inline ArithFn completely_mult_inverse(const ArithFn& f) {
    if (!is_completely_multiplicative(f))
        throw std::domain_error("completely_mult_inverse: f is not completely multiplicative");
    std::size_t N = f.horizon();
    ArithFn out(N);
    for (std::size_t n = 1; n <= N; ++n) out.at(n) = f(n) * Rational(mu(n));
    if (dirichlet_convolve(out, f) != epsilon_table(N))
        throw std::logic_error("completely_mult_inverse: verification failed");
    return out;
}

// Summatory transforms over the floor quotients of x.
// Given G at every distinct floor(x/n), returns F(x) = sum_{n<=x} mu(n) G(floor(x/n)).
inline Rational summatory_mobius_invert(const std::map<Integer, Rational>& G, const Integer& x) {
    if (x < 1) throw std::domain_error("summatory_mobius_invert: x must be >= 1");
    Rational out;
    for (Integer n = 1; n <= x; ++n) {
        auto it = G.find(x / n);
        if (it == G.end())
            throw std::domain_error("summatory_mobius_invert: missing quotient point " +
                                    Integer(x / n).str());
        out += Rational(mu(n)) * it->second;
    }
    return out;
}

// The inverse direction: G(x) = sum_{n<=x} F(floor(x/n)).
inline Rational summatory_sum(const std::map<Integer, Rational>& F, const Integer& x) {
    if (x < 1) throw std::domain_error("summatory_sum: x must be >= 1");
    Rational out;
    for (Integer n = 1; n <= x; ++n) {
        auto it = F.find(x / n);
        if (it == F.end())
            throw std::domain_error("summatory_sum: missing quotient point " + Integer(x / n).str());
        out += it->second;
    }
    return out;
}

using RationalMatrix = std::vector<std::vector<Rational>>;

struct DivisorMatrixPair {
    RationalMatrix A;
    RationalMatrix B;
};

// A_{jk} = lambda(k/j) when j | k, B_{km} = mu(m/k) lambda(m/k) when k | m;
// B is the inverse of A (verified).
inline DivisorMatrixPair divisor_matrix_pair(const ArithFn& lambda, std::size_t n) {
    if (n < 1) throw std::domain_error("divisor_matrix_pair: n must be >= 1");
    if (lambda.horizon() < n) throw std::domain_error("divisor_matrix_pair: horizon too small");
    if (lambda(1) != Rational(1)) throw std::domain_error("divisor_matrix_pair: lambda(1) != 1");
    for (std::size_t j = 2; j * j <= n; ++j)
        for (std::size_t k = j; j * k <= n; ++k)
            if (lambda(j * k) != lambda(j) * lambda(k))
                throw std::domain_error("divisor_matrix_pair: lambda not completely multiplicative");

    DivisorMatrixPair out;
    out.A.assign(n, std::vector<Rational>(n));
    out.B.assign(n, std::vector<Rational>(n));
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t k = 1; k <= n; ++k)
            if (k % j == 0) out.A[j - 1][k - 1] = lambda(k / j);
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t m = 1; m <= n; ++m)
            if (m % k == 0) out.B[k - 1][m - 1] = Rational(mu(m / k)) * lambda(m / k);

    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n; ++m) {
            Rational sum;
            for (std::size_t k = 0; k < n; ++k) sum += out.A[j][k] * out.B[k][m];
            if (sum != Rational(j == m ? 1 : 0))
                throw std::logic_error("divisor_matrix_pair: A*B is not the identity");
        }
    return out;
}

}  // namespace zahl
