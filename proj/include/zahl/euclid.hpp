#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "zahl/integer.hpp"

namespace zahl {

// One row of the extended Euclidean scheme. q is absent in the final row.
struct ExtEuclidRow {
    std::size_t j = 0;
    std::optional<Integer> q;
    Integer r;
    Integer s;
    Integer t;
};

// Full (q_j, r_j, s_j, t_j) table with abort index n*.
//
// The inputs are pre-normalized: a stays arbitrary, b becomes positive
// (a zero second argument is first swapped to the front). The normalized
// pair is recorded in the header fields a, b.
//
// Row identities maintained throughout:
//   r_0 = b, r_1 = a - b*floor(a/b), r_{j+1} = r_{j-1} - q_j r_j
//   s_0 = 1, s_1 = q_0, s_{j+1} = s_{j-1} + q_j s_j   (t likewise, t_0 = 0, t_1 = 1)
//   b s_j - a t_j = (-1)^j r_j
struct ExtEuclidTrace {
    Integer a;
    Integer b;
    std::vector<ExtEuclidRow> rows;  // rows 0..n_star
    std::size_t n_star = 0;

    const Integer& gcd() const { return rows[n_star - 1].r; }
};

inline ExtEuclidTrace ext_gcd(Integer a, Integer b) {
    if (a == 0 && b == 0) throw std::domain_error("ext_gcd: both arguments zero");
    if (b == 0) {
        b = a;
        a = 0;
    }
    if (b < 0) b = -b;

    ExtEuclidTrace tr;
    tr.a = a;
    tr.b = b;

    Integer q0 = floor_div(a, b).q;
    Integer r_prev = b;            // r_0
    Integer r_cur = a - b * q0;    // r_1
    Integer s_prev = 1, s_cur = q0;
    Integer t_prev = 0, t_cur = 1;

    tr.rows.push_back({0, q0, r_prev, s_prev, t_prev});
    std::size_t j = 1;
    while (r_cur != 0) {
        Integer q = floor_div(r_prev, r_cur).q;
        tr.rows.push_back({j, q, r_cur, s_cur, t_cur});
        Integer r_next = r_prev - q * r_cur;
        Integer s_next = s_prev + q * s_cur;
        Integer t_next = t_prev + q * t_cur;
        r_prev = r_cur;
        r_cur = r_next;
        s_prev = s_cur;
        s_cur = s_next;
        t_prev = t_cur;
        t_cur = t_next;
        ++j;
    }
    tr.rows.push_back({j, std::nullopt, r_cur, s_cur, t_cur});
    tr.n_star = j;
    return tr;
}

struct Bezout {
    Integer g;
    Integer lambda;  // coefficient of a
    Integer mu;      // coefficient of b
};

// g = gcd(a,b) = lambda*a + mu*b, extracted from the next-to-last trace row.
inline Bezout bezout(const Integer& a, const Integer& b) {
    if (a == 0 && b == 0) throw std::domain_error("bezout: both arguments zero");
    if (b == 0) return {abs(a), Integer(sgn(a)), 0};
    if (a == 0) return {abs(b), 0, Integer(sgn(b))};

    ExtEuclidTrace tr = ext_gcd(a, abs(b));
    const ExtEuclidRow& row = tr.rows[tr.n_star - 1];
    // b s_{n*-1} - a t_{n*-1} = (-1)^{n*-1} gcd
    bool even = tr.n_star % 2 == 0;
    Integer lambda = even ? row.t : Integer(-row.t);
    Integer mu = even ? Integer(-row.s) : row.s;
    if (b < 0) mu = -mu;
    Bezout out{tr.gcd(), std::move(lambda), std::move(mu)};
    if (out.lambda * a + out.mu * b != out.g) throw std::logic_error("bezout: identity violated");
    return out;
}

struct MultiGcd {
    Integer g;
    std::vector<Integer> coeffs;
};

// g = sum lambda_k a_k over a nonempty list with at least one nonzero entry.
inline MultiGcd gcd_multi(const std::vector<Integer>& values) {
    if (values.empty()) throw std::domain_error("gcd_multi: empty input");
    bool any = false;
    for (const Integer& v : values)
        if (v != 0) any = true;
    if (!any) throw std::domain_error("gcd_multi: all arguments zero");

    MultiGcd out;
    out.g = 0;
    out.coeffs.assign(values.size(), Integer(0));
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (out.g == 0 && values[k] == 0) continue;
        Bezout bz = bezout(out.g, values[k]);
        for (std::size_t i = 0; i < k; ++i) out.coeffs[i] *= bz.lambda;
        out.coeffs[k] = bz.mu;
        out.g = bz.g;
    }
    return out;
}

}  // namespace zahl
