#pragma once

#include <stdexcept>
#include <vector>

#include "zahl/euclid.hpp"
#include "zahl/integer.hpp"
#include "zahl/rational.hpp"
#include "zahl/surd.hpp"

namespace zahl {

// Adjacency test in the extended Farey sequence F_n^ext: the four conditions
// a'b - ab' = 1, b <= n, b' <= n, b + b' > n.
inline bool is_neighbors(const Rational& x, const Rational& y, const Integer& n) {
    if (!(x < y)) throw std::domain_error("is_neighbors: need x < y");
    return y.num() * x.den() - x.num() * y.den() == 1 && x.den() <= n && y.den() <= n &&
           x.den() + y.den() > n;
}

// Two adjacent fractions of F_n^ext enclosing some value.
struct FareyPair {
    Rational left;
    Rational right;
    Integer order;

    FareyPair(Rational lo, Rational hi, Integer n)
        : left(std::move(lo)), right(std::move(hi)), order(std::move(n)) {
        if (!is_neighbors(left, right, order))
            throw std::domain_error("FareyPair: fractions are not adjacent in F_n^ext");
    }
};

// Right neighbor of a/b in F_b^ext, read off the extended Euclidean trace:
// for odd n* it is s_{n*-1}/t_{n*-1} directly, for even n* the complement
// (a - s_{n*-1})/(b - t_{n*-1}).
inline Rational neighbor_seed(const Rational& ab) {
    const Integer& a = ab.num();
    const Integer& b = ab.den();
    if (b == 1) return Rational(a + 1);
    ExtEuclidTrace tr = ext_gcd(a, b);
    const ExtEuclidRow& row = tr.rows[tr.n_star - 1];
    if (tr.n_star % 2 == 1) return Rational(row.s, row.t);
    return Rational(a - row.s, b - row.t);
}

// Right neighbor of a/b in F_n^ext, given its right neighbor a*/b* in F_b^ext.
inline Rational right_neighbor(const Rational& ab, const Rational& astar_bstar, const Integer& n) {
    if (n < ab.den()) throw std::domain_error("right_neighbor: order below denominator");
    if (!is_neighbors(ab, astar_bstar, ab.den()))
        throw std::domain_error("right_neighbor: seed is not the F_b^ext neighbor");
    Integer q = floor_div(n - astar_bstar.den(), ab.den()).q;
    return Rational(astar_bstar.num() + ab.num() * q, astar_bstar.den() + ab.den() * q);
}

// Left neighbor of a/b in F_n^ext, given its left neighbor a_*/b_* in F_b^ext.
inline Rational left_neighbor(const Rational& ab, const Rational& lower, const Integer& n) {
    if (n < ab.den()) throw std::domain_error("left_neighbor: order below denominator");
    if (!is_neighbors(lower, ab, ab.den()))
        throw std::domain_error("left_neighbor: seed is not the F_b^ext neighbor");
    Integer q = floor_div(n - lower.den(), ab.den()).q;
    return Rational(lower.num() + ab.num() * q, lower.den() + ab.den() * q);
}

// Successor of cur in F_n^ext given its predecessor:
// a'' = a' floor((n+b)/b') - a, b'' = b' floor((n+b)/b') - b.
inline Rational next_in_section(const Rational& prev, const Rational& cur, const Integer& n) {
    if (!is_neighbors(prev, cur, n))
        throw std::domain_error("next_in_section: inputs not adjacent in F_n^ext");
    Integer k = floor_div(n + prev.den(), cur.den()).q;
    return Rational(cur.num() * k - prev.num(), cur.den() * k - prev.den());
}

// Predecessor of cur in F_n^ext given its successor (backward recursion).
inline Rational prev_in_section(const Rational& cur, const Rational& next, const Integer& n) {
    if (!is_neighbors(cur, next, n))
        throw std::domain_error("prev_in_section: inputs not adjacent in F_n^ext");
    Integer k = floor_div(n + next.den(), cur.den()).q;
    return Rational(cur.num() * k - next.num(), cur.den() * k - next.den());
}

// All fractions of F_n^ext in [lo, hi], ascending, by neighbor seeding plus the
// forward recursion. Never materializes the full sequence.
inline std::vector<Rational> section(const Rational& lo, const Rational& hi, const Integer& n) {
    if (n < 1) throw std::domain_error("section: order must be >= 1");
    if (lo.den() > n || hi.den() > n)
        throw std::domain_error("section: endpoint not representable in F_n^ext");
    if (hi < lo) throw std::domain_error("section: empty interval");
    std::vector<Rational> out{lo};
    if (lo == hi) return out;
    Rational cur = right_neighbor(lo, neighbor_seed(lo), n);
    Rational prev = lo;
    while (cur <= hi) {
        out.push_back(cur);
        Rational nxt = next_in_section(prev, cur, n);
        prev = cur;
        cur = nxt;
    }
    return out;
}

// The two F_n^ext neighbors enclosing the irrational x, from the convergents
// s_j/t_j of its expansion: the index j with t_j < n <= t_{j+1} pairs with the
// intermediate fraction built from floor((n - t_{j-1}) / t_j).
inline FareyPair farey_approx(const QuadraticSurd& x, const Integer& n) {
    if (n < 1) throw std::domain_error("farey_approx: order must be >= 1");

    Integer s_prev = 1, t_prev = 0;  // s_{j-1}, t_{j-1}
    QuadraticSurd state = x;
    Integer q0 = surd_floor(state);
    Integer s_cur = q0, t_cur = 1;  // s_j, t_j
    std::size_t j = 1;

    if (n > 1) {
        // advance until t_{j+1} >= n; indices stay >= 1
        for (;;) {
            CFStep step = cf_step(state);
            state = step.next;
            Integer q_next = surd_floor(state);
            Integer s_next = s_prev + q_next * s_cur;
            Integer t_next = t_prev + q_next * t_cur;
            if (t_next >= n) break;
            s_prev = s_cur;
            t_prev = t_cur;
            s_cur = s_next;
            t_cur = t_next;
            ++j;
        }
    }

    Integer q = floor_div(n - t_prev, t_cur).q;
    Rational inner(s_prev + q * s_cur, t_prev + q * t_cur);
    Rational conv(s_cur, t_cur);
    if (j % 2 == 1) return FareyPair(conv, inner, n);
    return FareyPair(inner, conv, n);
}

}  // namespace zahl
