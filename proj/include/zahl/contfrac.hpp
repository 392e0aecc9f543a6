#pragma once

#include <stdexcept>
#include <vector>

#include "zahl/euclid.hpp"
#include "zahl/integer.hpp"
#include "zahl/rational.hpp"

namespace zahl {

// Finite continued fraction <head, tail...> with all tail entries >= 1.
// Canonical form additionally has last entry > 1 when there is a tail.
struct FiniteCF {
    Integer head;
    std::vector<Integer> tail;

    FiniteCF() : head(0) {}
    FiniteCF(Integer h, std::vector<Integer> t) : head(std::move(h)), tail(std::move(t)) {
        for (const Integer& q : tail)
            if (q < 1) throw std::domain_error("FiniteCF: tail entries must be >= 1");
    }

    std::size_t length() const { return tail.size() + 1; }

    // Quotient list q_0, q_1, ...
    std::vector<Integer> quotients() const {
        std::vector<Integer> qs{head};
        qs.insert(qs.end(), tail.begin(), tail.end());
        return qs;
    }

    friend bool operator==(const FiniteCF& x, const FiniteCF& y) {
        return x.head == y.head && x.tail == y.tail;
    }
};

// Convergent rows (s_j, t_j), seeded s_0 = 1, t_0 = 0, s_1 = q_0, t_1 = 1,
// with s_{j+1} = s_{j-1} + q_j s_j and likewise for t.
// Satisfies s_j t_{j+1} - t_j s_{j+1} = (-1)^j.
struct Convergents {
    struct Row {
        Integer s;
        Integer t;
    };
    std::vector<Row> rows;

    Rational value(std::size_t j) const { return Rational(rows[j].s, rows[j].t); }
    const Row& back() const { return rows.back(); }
};

// Right-to-left evaluation per the defining recursion.
inline Rational eval_finite_cf(const FiniteCF& cf) {
    for (const Integer& q : cf.tail)
        if (q < 1) throw std::domain_error("eval_finite_cf: tail entries must be >= 1");
    Rational acc(cf.tail.empty() ? cf.head : cf.tail.back());
    for (std::size_t i = cf.tail.size(); i-- > 1;) {
        acc = Rational(cf.tail[i - 1]) + acc.reciprocal();
    }
    if (!cf.tail.empty()) acc = Rational(cf.head) + acc.reciprocal();
    return acc;
}

inline Convergents convergents_of(const std::vector<Integer>& quotients) {
    Convergents cv;
    Integer s_prev = 1, t_prev = 0;
    cv.rows.push_back({s_prev, t_prev});
    if (quotients.empty()) return cv;
    Integer s_cur = quotients[0], t_cur = 1;
    cv.rows.push_back({s_cur, t_cur});
    for (std::size_t j = 1; j < quotients.size(); ++j) {
        Integer s_next = s_prev + quotients[j] * s_cur;
        Integer t_next = t_prev + quotients[j] * t_cur;
        cv.rows.push_back({s_next, t_next});
        s_prev = s_cur;
        s_cur = s_next;
        t_prev = t_cur;
        t_cur = t_next;
    }
    return cv;
}

inline Convergents convergents(const FiniteCF& cf) { return convergents_of(cf.quotients()); }

// Expansion of a rational via the extended Euclidean algorithm.
// canonical = true yields the variant whose last term exceeds 1 (unique),
// canonical = false the twin representation ending in 1.
inline FiniteCF cf_of_rational(const Rational& x, bool canonical = true) {
    ExtEuclidTrace tr = ext_gcd(x.num(), x.den());
    std::vector<Integer> qs;
    for (std::size_t j = 0; j < tr.n_star; ++j) qs.push_back(*tr.rows[j].q);
    // The trace always ends with q_{n*-1} >= 2 when n* >= 2, so it is already
    // canonical. The twin representation trades <...,q> for <...,q-1,1>.
    if (!canonical) {
        qs.back() -= 1;
        qs.push_back(1);
    }
    FiniteCF cf;
    cf.head = qs[0];
    cf.tail.assign(qs.begin() + 1, qs.end());
    return cf;
}

}  // namespace zahl
