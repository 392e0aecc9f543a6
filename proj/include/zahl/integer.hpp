#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zahl {

// The universal exact scalar: arbitrary-precision signed integer.
// No operation in this library ever rounds.
using Integer = boost::multiprecision::cpp_int;

inline int sgn(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline std::size_t bit_length(const Integer& x) {
    if (x == 0) return 0;
    return boost::multiprecision::msb(abs(x)) + 1;
}

struct DivResult {
    Integer q;
    Integer r;
};

// Division with nonnegative remainder: a = q*b + r, 0 <= r < b.
// The divisor must be positive; callers normalize signs themselves.
inline DivResult floor_div(const Integer& a, const Integer& b) {
    if (b <= 0) throw std::domain_error("floor_div: divisor must be positive");
    Integer q = a / b;  // truncates toward zero
    Integer r = a - q * b;
    if (r < 0) {
        q -= 1;
        r += b;
    }
    return {std::move(q), std::move(r)};
}

inline Integer floor_quot(const Integer& a, const Integer& b) { return floor_div(a, b).q; }

// Largest k with k*k <= n, by integer Newton iteration seeded from the bit
// length, with a monotone correction at the end. No floating point.
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    if (n < 2) return n;
    Integer x = Integer(1) << (bit_length(n) / 2 + 1);
    for (;;) {
        Integer y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

inline bool is_square(const Integer& n) {
    if (n < 0) return false;
    Integer r = isqrt(n);
    return r * r == n;
}

// Euclidean gcd, nonnegative. gcd(0,0) = 0 by convention.
inline Integer gcd(Integer a, Integer b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    if (a < 1 || b < 1) throw std::domain_error("lcm: arguments must be positive");
    return a / gcd(a, b) * b;
}

// Digits of a in base b, most significant first. digits(0, b) = [0].
inline std::vector<Integer> digits(const Integer& a, const Integer& base) {
    if (a < 0) throw std::domain_error("digits: negative argument");
    if (base < 2) throw std::domain_error("digits: base must be >= 2");
    std::vector<Integer> out;
    Integer v = a;
    do {
        auto [q, r] = floor_div(v, base);
        out.push_back(r);
        v = q;
    } while (v != 0);
    std::reverse(out.begin(), out.end());
    return out;
}

inline Integer from_digits(const std::vector<Integer>& ds, const Integer& base) {
    if (base < 2) throw std::domain_error("from_digits: base must be >= 2");
    Integer v = 0;
    for (const Integer& d : ds) {
        if (d < 0 || d >= base) throw std::domain_error("from_digits: digit out of range");
        v = v * base + d;
    }
    return v;
}

namespace detail {

struct Mat2 {
    Integer a, b, c, d;  // [[a,b],[c,d]]
};

inline Mat2 mul(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

}  // namespace detail

// f_0 = 0, f_1 = 1, f_{n+2} = f_{n+1} + f_n, extended by f_{-1} = 1.
// Computed as a power of [[1,1],[1,0]].
inline Integer fibonacci(long long n) {
    if (n < -1) throw std::domain_error("fibonacci: index must be >= -1");
    if (n == -1) return 1;
    detail::Mat2 result{1, 0, 0, 1};
    detail::Mat2 base{1, 1, 1, 0};
    unsigned long long e = static_cast<unsigned long long>(n);
    while (e > 0) {
        if (e & 1) result = detail::mul(result, base);
        base = detail::mul(base, base);
        e >>= 1;
    }
    return result.b;  // [[1,1],[1,0]]^n = [[f_{n+1},f_n],[f_n,f_{n-1}]]
}

struct Triple {
    Integer a, b, c;
};

// (u^2 - v^2, 2uv, u^2 + v^2) for u > v >= 1, gcd(u,v) = 1, u*v even.
inline Triple pythagorean_triple(const Integer& u, const Integer& v) {
    if (v < 1 || u <= v) throw std::domain_error("pythagorean_triple: need u > v >= 1");
    if (gcd(u, v) != 1) throw std::domain_error("pythagorean_triple: u, v not coprime");
    if ((u * v) % 2 != 0) throw std::domain_error("pythagorean_triple: u*v must be even");
    return {u * u - v * v, 2 * u * v, u * u + v * v};
}

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace zahl
