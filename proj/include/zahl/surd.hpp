#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zahl/contfrac.hpp"
#include "zahl/integer.hpp"
#include "zahl/rational.hpp"

namespace zahl {

// Sign of L - K*sqrt(D) for integers L, K and positive nonsquare D.
// All comparisons against quadratic irrationals reduce to this.
inline int compare_int_vs_sqrt(const Integer& L, const Integer& K, const Integer& D) {
    if (K == 0) return sgn(L);
    if (K > 0) {
        if (L <= 0) return -1;
        return sgn(L * L - K * K * D);
    }
    if (L >= 0) return 1;
    return sgn(K * K * D - L * L);
}

// Exact value (sqrt(D) - b) / (2a) with integer data, D > 0 nonsquare and
// 4a | b^2 - D, so that c = (b^2 - D)/(4a) is an integer. Irrational by
// construction.
class QuadraticSurd {
public:
    QuadraticSurd(Integer a, Integer b, Integer D)
        : a_(std::move(a)), b_(std::move(b)), D_(std::move(D)) {
        if (a_ == 0) throw std::domain_error("QuadraticSurd: a must be nonzero");
        if (D_ <= 0) throw std::domain_error("QuadraticSurd: D must be positive");
        if (is_square(D_)) throw std::domain_error("QuadraticSurd: D must not be a square");
        if ((b_ * b_ - D_) % (4 * a_) != 0)
            throw std::domain_error("QuadraticSurd: 4a must divide b^2 - D");
    }

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& D() const { return D_; }
    Integer c() const { return (b_ * b_ - D_) / (4 * a_); }

    // Sign of (this - s/t), exact. t >= 1 required.
    int compare(const Rational& x) const {
        // (sqrt(D)-b)/(2a) - s/t  has the sign of (t sqrt(D) - (tb + 2as)) * sgn(a).
        Integer m = x.den() * b_ + 2 * a_ * x.num();
        return -compare_int_vs_sqrt(m, x.den(), D_) * sgn(a_);
    }

    bool operator<(const Rational& x) const { return compare(x) < 0; }
    bool operator>(const Rational& x) const { return compare(x) > 0; }

    friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.D_ == y.D_;
    }

    std::string str() const {
        std::string mid = b_ > 0 ? "-" + b_.str() : (b_ < 0 ? "+" + Integer(-b_).str() : "");
        return "(sqrt(" + D_.str() + ")" + mid + ")/" + Integer(2 * a_).str();
    }

private:
    Integer a_, b_, D_;
};

// floor((sqrt(D)-b)/(2a)) using only f = isqrt(D).
inline Integer surd_floor(const QuadraticSurd& x) {
    Integer f = isqrt(x.D());
    if (x.a() > 0) return floor_div(f - x.b(), 2 * x.a()).q;
    return floor_div(x.b() - (f + 1), -2 * x.a()).q;
}

struct CFStep {
    Integer q;
    QuadraticSurd next;
};

// One continued-fraction step: q = floor(x), next = 1/(x - q).
// Shift keeps (a, b+2aq, c+q(b+aq)); reciprocation swaps and negates.
inline CFStep cf_step(const QuadraticSurd& x) {
    Integer q = surd_floor(x);
    Integer a = x.a(), b = x.b(), c = x.c();
    Integer b_shift = b + 2 * a * q;
    Integer c_shift = c + q * (b + a * q);
    // 1/x_shift = (sqrt(D) - (-b_shift)) / (2 * (-c_shift))
    return {q, QuadraticSurd(-c_shift, -b_shift, x.D())};
}

// Eventually periodic expansion: <preperiod..., overline(period...)>.
struct PeriodicCF {
    std::vector<Integer> preperiod;
    std::vector<Integer> period;  // nonempty, minimal

    // First n quotients q_0, q_1, ... with the period unrolled.
    std::vector<Integer> prefix(std::size_t n) const {
        std::vector<Integer> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n && i < preperiod.size(); ++i) out.push_back(preperiod[i]);
        std::size_t k = 0;
        while (out.size() < n) {
            out.push_back(period[k % period.size()]);
            ++k;
        }
        return out;
    }

    friend bool operator==(const PeriodicCF& x, const PeriodicCF& y) {
        return x.preperiod == y.preperiod && x.period == y.period;
    }
};

// Expansion of a quadratic surd. States (a_j, b_j) are compared exactly under
// the fixed discriminant, so the first repetition marks the minimal period.
inline PeriodicCF cf_of_surd(QuadraticSurd x) {
    // Generous termination guard; the reachable state space is finite, so this
    // can only fire on an implementation bug.
    std::size_t guard = 1000000 + 64 * (bit_length(x.a()) + bit_length(x.b()) + bit_length(x.D()));
    std::map<std::pair<Integer, Integer>, std::size_t> seen;
    std::vector<Integer> quotients;
    std::size_t index = 0;
    for (;;) {
        auto key = std::make_pair(x.a(), x.b());
        auto it = seen.find(key);
        if (it != seen.end()) {
            PeriodicCF out;
            out.preperiod.assign(quotients.begin(), quotients.begin() + it->second);
            out.period.assign(quotients.begin() + it->second, quotients.end());
            return out;
        }
        seen.emplace(key, index);
        CFStep step = cf_step(x);
        quotients.push_back(step.q);
        x = step.next;
        ++index;
        if (index > guard) throw std::logic_error("cf_of_surd: iteration guard exceeded");
    }
}

// The value <overline(a, b)> = a/2 + sqrt(a^2/4 + a/b), as the normalized surd
// (sqrt(D) - b') / (2a') with D = a^2 b^2 + 4ab, b' = -ab, a' = b.
inline QuadraticSurd periodic_two_cycle(const Integer& a, const Integer& b) {
    if (a < 1 || b < 1) throw std::domain_error("periodic_two_cycle: parameters must be >= 1");
    return QuadraticSurd(b, -a * b, a * a * b * b + 4 * a * b);
}

// Convergent rows 0..j_max of the expansion of x; rows j >= 2 are the best
// rational approximations of x among all fractions with denominator <= t_j.
inline Convergents best_approximations(const QuadraticSurd& x, std::size_t j_max) {
    if (j_max < 2) throw std::domain_error("best_approximations: need j_max >= 2");
    return convergents_of(cf_of_surd(x).prefix(j_max));
}

}  // namespace zahl
