#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zahl/integer.hpp"
#include "zahl/surd.hpp"

namespace zahl {

// Binary quadratic form F(x,y) = a x^2 + b xy + c y^2.
struct Form {
    Integer a, b, c;

    friend bool operator==(const Form& x, const Form& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend bool operator<(const Form& x, const Form& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    }

    bool is_zero() const { return a == 0 && b == 0 && c == 0; }

    std::string str() const { return a.str() + "," + b.str() + "," + c.str(); }
};

inline Integer discriminant(const Form& F) { return F.b * F.b - 4 * F.a * F.c; }

enum class FormClass { indefinite, positive_definite, negative_definite, degenerate_square };

inline FormClass classify(const Form& F) {
    if (F.is_zero()) throw std::domain_error("classify: zero form");
    Integer D = discriminant(F);
    if (D < 0) return F.a > 0 ? FormClass::positive_definite : FormClass::negative_definite;
    if (is_square(D)) return FormClass::degenerate_square;
    return FormClass::indefinite;
}

inline bool is_primitive(const Form& F) {
    if (F.is_zero()) throw std::domain_error("is_primitive: zero form");
    return gcd(gcd(F.a, F.b), F.c) == 1;
}

inline void require_indefinite(const Form& F, const char* who) {
    if (F.is_zero() || classify(F) != FormClass::indefinite)
        throw std::domain_error(std::string(who) + ": form must be indefinite (D > 0 nonsquare)");
}

// The quadratic irrational X(F) = (sqrt(D) - b) / (2a) attached to an
// indefinite form; injective on primitive forms.
inline QuadraticSurd surd_of_form(const Form& F) {
    require_indefinite(F, "surd_of_form");
    return QuadraticSurd(F.a, F.b, discriminant(F));
}

// The improperly conjugate form F_- = (-a, b, -c).
inline Form form_minus(const Form& F) { return {-F.a, F.b, -F.c}; }

// 2x2 integer matrix with determinant +-1.
struct UniMatrix {
    Integer a11, a12, a21, a22;

    UniMatrix(Integer m11, Integer m12, Integer m21, Integer m22)
        : a11(std::move(m11)), a12(std::move(m12)), a21(std::move(m21)), a22(std::move(m22)) {
        Integer d = det();
        if (d != 1 && d != -1) throw std::domain_error("UniMatrix: determinant must be +-1");
    }

    static UniMatrix identity() { return {1, 0, 0, 1}; }

    Integer det() const { return a11 * a22 - a12 * a21; }
    Integer trace() const { return a11 + a22; }

    UniMatrix operator*(const UniMatrix& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }

    UniMatrix inverse() const {
        if (det() == 1) return {a22, -a12, -a21, a11};
        return {-a22, a12, a21, -a11};
    }

    UniMatrix operator-() const { return {-a11, -a12, -a21, -a22}; }

    friend bool operator==(const UniMatrix& x, const UniMatrix& y) {
        return x.a11 == y.a11 && x.a12 == y.a12 && x.a21 == y.a21 && x.a22 == y.a22;
    }

    std::string str() const {
        return "[" + a11.str() + "," + a12.str() + "; " + a21.str() + "," + a22.str() + "]";
    }
};

// F^A(x,y) = F(alpha x + beta y, gamma x + delta y); preserves the
// discriminant and the content gcd(a,b,c).
inline Form transform(const Form& F, const UniMatrix& A) {
    Integer a2 = F.a * A.a11 * A.a11 + F.b * A.a11 * A.a21 + F.c * A.a21 * A.a21;
    Integer b2 = 2 * F.a * A.a11 * A.a12 + F.b * (A.a11 * A.a22 + A.a12 * A.a21) +
                 2 * F.c * A.a21 * A.a22;
    Integer c2 = F.a * A.a12 * A.a12 + F.b * A.a12 * A.a22 + F.c * A.a22 * A.a22;
    return {a2, b2, c2};
}

struct KSuccessor {
    Integer q;
    Form next;
};

// K-successor G' of an indefinite G: one continued-fraction step on 1/X(G).
// q = floor(1/X(G)) via f = floor(sqrt(D)), then
// a' = -c, b' = -2cq - b, c' = q(-cq - b) - a, i.e. G' = -G^[[0,1],[1,q]].
inline KSuccessor k_successor(const Form& G) {
    require_indefinite(G, "k_successor");
    Integer f = isqrt(discriminant(G));
    Integer q = G.c < 0 ? floor_div(f + G.b, -2 * G.c).q : floor_div(-(f + G.b + 1), 2 * G.c).q;
    Form next{-G.c, -2 * G.c * q - G.b, q * (-G.c * q - G.b) - G.a};
    return {std::move(q), std::move(next)};
}

// K-reduced: a > 0, b > 0, f - min(2a, 2|c|) < b <= f. The two equivalent
// characterizations a > 0, c < 0, |a+c| < b and a > 0, b > 0, c < 0,
// a - c <= f are evaluated alongside and must agree.
inline bool is_k_reduced(const Form& G) {
    require_indefinite(G, "is_k_reduced");
    Integer f = isqrt(discriminant(G));
    Integer m = 2 * abs(G.c) < 2 * G.a ? 2 * abs(G.c) : Integer(2 * G.a);
    bool direct = G.a > 0 && G.b > 0 && f - m < G.b && G.b <= f;
    bool second = G.a > 0 && G.c < 0 && abs(G.a + G.c) < G.b;
    bool third = G.a > 0 && G.b > 0 && G.c < 0 && G.a - G.c <= f;
    if (direct != second || second != third)
        throw std::logic_error("is_k_reduced: characterizations disagree");
    return direct;
}

inline bool is_reduced(const Form& G) {
    require_indefinite(G, "is_reduced");
    bool direct = is_k_reduced(G) || is_k_reduced(form_minus(G));
    bool second = G.a * G.c < 0 && abs(G.a + G.c) < G.b;
    Integer f = isqrt(discriminant(G));
    bool third = G.b > 0 && G.a * G.c < 0 && abs(G.a) + abs(G.c) <= f;
    if (direct != second || second != third)
        throw std::logic_error("is_reduced: characterizations disagree");
    return direct;
}

// One row of the reduction scheme: G_j, q_j, the sign-corrected form
// F_j = ((-1)^{j+1} a_j, b_j, (-1)^{j+1} c_j) = F^{T_j}, and the step matrix
// A_j with T_{j+1} = T_j A_j.
struct ReductionRow {
    std::size_t j;
    Form G;
    Integer q;
    Form F_j;
    UniMatrix T;
    UniMatrix A;
};

struct ReductionReport {
    Form input;
    Integer D;
    Integer f;  // floor(sqrt(D))
    Integer q0;
    std::vector<ReductionRow> rows;  // j = 1 .. j* + L' with L' the even F-period
    std::size_t period_start = 0;    // index j* of the first K-reduced form
    std::size_t period_length = 0;   // minimal period L of the G sequence

    const ReductionRow& row(std::size_t j) const { return rows.at(j - 1); }

    // q_0, q_1, ..., q_m: the continued-fraction quotients of X(F).
    std::vector<Integer> quotients() const {
        std::vector<Integer> out{q0};
        for (const auto& r : rows) out.push_back(r.q);
        return out;
    }

    // The even period length on the F_j values.
    std::size_t form_period() const {
        return period_length % 2 == 0 ? period_length : 2 * period_length;
    }
};

// Reduction of an indefinite form by continued fractions: the parallel form
// G_1 followed by K-successors until the G values cycle, extended so that the
// rows cover one full sign-aligned period of the F_j.
inline ReductionReport reduce(const Form& F) {
    require_indefinite(F, "reduce");
    ReductionReport rep{F, discriminant(F), 0, 0, {}, 0, 0};
    rep.f = isqrt(rep.D);
    rep.q0 = surd_floor(QuadraticSurd(F.a, F.b, rep.D));

    Form G{F.a, F.b + 2 * F.a * rep.q0, F.c + rep.q0 * (F.b + F.a * rep.q0)};
    UniMatrix T(1, rep.q0, 0, 1);

    std::map<std::pair<Integer, Integer>, std::size_t> seen;
    std::size_t stop = 0;  // 0 while the period is still unknown
    std::size_t guard =
        1000000 + 64 * (bit_length(F.a) + bit_length(F.b) + bit_length(F.c) + bit_length(rep.D));

    for (std::size_t j = 1;; ++j) {
        if (stop == 0) {
            auto key = std::make_pair(G.a, G.b);
            auto it = seen.find(key);
            if (it != seen.end()) {
                rep.period_start = it->second;
                rep.period_length = j - it->second;
                stop = it->second + rep.form_period();
            } else {
                seen.emplace(key, j);
            }
        }

        bool odd = j % 2 == 1;
        KSuccessor step = k_successor(G);
        Form F_j = odd ? G : form_minus(G);
        UniMatrix A(0, odd ? 1 : -1, odd ? -1 : 1, step.q);
        rep.rows.push_back({j, G, step.q, F_j, T, A});
        if (transform(F, T) != F_j) throw std::logic_error("reduce: F^T_j != F_j");

        if (stop != 0 && j >= stop) break;
        if (j > guard) throw std::logic_error("reduce: iteration guard exceeded");
        T = T * A;
        G = step.next;
    }
    return rep;
}

// T_{j*+L'} T_{j*}^{-1} for the even form period L': a nontrivial automorph
// of a primitive indefinite form.
inline UniMatrix automorphism_from_period(const Form& F) {
    require_indefinite(F, "automorphism_from_period");
    if (!is_primitive(F)) throw std::domain_error("automorphism_from_period: form not primitive");
    ReductionReport rep = reduce(F);
    const UniMatrix& T_end = rep.row(rep.period_start + rep.form_period()).T;
    const UniMatrix& T_start = rep.row(rep.period_start).T;
    UniMatrix A = T_end * T_start.inverse();
    if (A.det() != 1 || transform(F, A) != F)
        throw std::logic_error("automorphism_from_period: verification failed");
    return A;
}

// Principal form of discriminant D: (1, 0, -D/4) or (1, 1, -(D-1)/4).
inline Form hauptform(const Integer& D) {
    if (is_square(D)) throw std::domain_error("hauptform: D must not be a square");
    Integer r = floor_div(D, 4).r;
    if (r == 0) return {1, 0, -(D / 4)};
    if (r == 1) return {1, 1, -((D - 1) / 4)};
    throw std::domain_error("hauptform: D must be 0 or 1 mod 4");
}

struct PellSolution {
    Integer t;
    Integer u;
};

// Fundamental solution of t^2 - D u^2 = 4, extracted from the period
// automorph of the principal form and confirmed minimal by a scan over u.
inline PellSolution pell(const Integer& D) {
    if (D <= 0) throw std::domain_error("pell: D must be positive");
    Form H = hauptform(D);  // also rejects square D and D = 2, 3 mod 4
    UniMatrix A = automorphism_from_period(H);
    Integer t = abs(A.trace());
    Integer u = abs(A.a21);
    if (t * t - D * u * u != 4) throw std::logic_error("pell: period automorph is not a solution");
    for (Integer v = 1; v < u; ++v) {
        Integer w2 = 4 + D * v * v;
        if (is_square(w2)) return {isqrt(w2), v};
    }
    return {t, u};
}

// Minimal positive solution of x^2 - m y^2 = 1 for nonsquare m >= 2,
// through pell(4m).
inline PellSolution pell_unit(const Integer& m) {
    if (m < 2) throw std::domain_error("pell_unit: m must be >= 2");
    if (is_square(m)) throw std::domain_error("pell_unit: m must not be a square");
    PellSolution s = pell(4 * m);
    PellSolution out{s.t / 2, s.u};
    if (out.t * out.t - m * out.u * out.u != 1)
        throw std::logic_error("pell_unit: verification failed");
    return out;
}

// The automorph [[ (t-bu)/2, -cu ], [ au, (t+bu)/2 ]] attached to a Pell
// solution; t = bu (mod 2) holds automatically.
inline UniMatrix automorph_from_pell(const Form& F, const Integer& t, const Integer& u) {
    Integer D = discriminant(F);
    if (t * t - D * u * u != 4)
        throw std::domain_error("automorph_from_pell: (t, u) does not solve t^2 - Du^2 = 4");
    if (floor_div(t - F.b * u, 2).r != 0)
        throw std::logic_error("automorph_from_pell: parity violated");
    UniMatrix A((t - F.b * u) / 2, -F.c * u, F.a * u, (t + F.b * u) / 2);
    if (transform(F, A) != F) throw std::logic_error("automorph_from_pell: F^A != F");
    return A;
}

// Complete automorph list of a primitive definite form: +-I for D < -4,
// four matrices for D = -4, six for D = -3.
inline std::vector<UniMatrix> definite_automorphisms(const Form& F) {
    if (F.is_zero() || discriminant(F) >= 0)
        throw std::domain_error("definite_automorphisms: form must be definite");
    if (!is_primitive(F)) throw std::domain_error("definite_automorphisms: form not primitive");
    Integer D = discriminant(F);
    std::vector<UniMatrix> out{UniMatrix::identity(), -UniMatrix::identity()};
    if (D == -4) {
        UniMatrix M(-F.b / 2, -F.c, F.a, F.b / 2);
        out.push_back(M);
        out.push_back(-M);
    } else if (D == -3) {
        UniMatrix M1((1 - F.b) / 2, -F.c, F.a, (1 + F.b) / 2);
        UniMatrix M2((1 + F.b) / 2, F.c, -F.a, (1 - F.b) / 2);
        out.push_back(M1);
        out.push_back(-M1);
        out.push_back(M2);
        out.push_back(-M2);
    }
    for (const UniMatrix& A : out)
        if (transform(F, A) != F) throw std::logic_error("definite_automorphisms: F^A != F");
    return out;
}

// Proper (SL2) equivalence test by comparing the reduction periods: the
// witness A with F^A = F' is composed from the transformation matrices that
// reach a shared periodic form. Absent when the periods are disjoint.
inline std::optional<UniMatrix> properly_equivalent(const Form& F, const Form& G) {
    require_indefinite(F, "properly_equivalent");
    require_indefinite(G, "properly_equivalent");
    if (!is_primitive(F) || !is_primitive(G))
        throw std::domain_error("properly_equivalent: forms must be primitive");
    if (discriminant(F) != discriminant(G))
        throw std::domain_error("properly_equivalent: discriminant mismatch");

    ReductionReport rf = reduce(F);
    ReductionReport rg = reduce(G);
    std::map<Form, UniMatrix> period_of_g;
    for (std::size_t j = rg.period_start; j < rg.period_start + rg.form_period(); ++j)
        period_of_g.emplace(rg.row(j).F_j, rg.row(j).T);
    for (std::size_t j = rf.period_start; j < rf.period_start + rf.form_period(); ++j) {
        auto it = period_of_g.find(rf.row(j).F_j);
        if (it == period_of_g.end()) continue;
        UniMatrix A = rf.row(j).T * it->second.inverse();
        if (transform(F, A) != G) throw std::logic_error("properly_equivalent: witness failed");
        return A;
    }
    return std::nullopt;
}

}  // namespace zahl
