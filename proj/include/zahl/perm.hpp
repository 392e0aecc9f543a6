#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zahl {

class Permutation;

// Disjoint cycles covering {1..n}; fixpoints may be elided for display.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;
    int degree = 0;
    bool fixpoints_included = true;

    std::string str() const {
        if (cycles.empty()) return "[]";
        std::string out = "[";
        for (const auto& cyc : cycles) {
            out += "(";
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(cyc[i]);
            }
            out += ")";
        }
        return out + "]";
    }
};

// Bijection of {1..n}, stored as the image list f(1), ..., f(n).
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> hit(images_.size(), false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || hit[v - 1])
                throw std::domain_error("Permutation: image list is not a bijection");
            hit[v - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = i + 1;
        return Permutation(std::move(img));
    }

    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        Permutation p = identity(n);
        std::vector<bool> used(n, false);
        for (const auto& cyc : cycles)
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int from = cyc[i];
                int to = cyc[(i + 1) % cyc.size()];
                if (from < 1 || from > n) throw std::domain_error("from_cycles: entry out of range");
                if (used[from - 1]) throw std::domain_error("from_cycles: cycles not disjoint");
                used[from - 1] = true;
                p.images_[from - 1] = to;
            }
        return Permutation(p.images_);  // revalidate
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const {
        if (x < 1 || x > degree()) throw std::domain_error("Permutation: argument out of range");
        return images_[x - 1];
    }
    const std::vector<int>& images() const { return images_; }

    friend bool operator==(const Permutation& f, const Permutation& g) {
        return f.images_ == g.images_;
    }
    friend bool operator<(const Permutation& f, const Permutation& g) {
        return f.images_ < g.images_;
    }

private:
    std::vector<int> images_;
};

// (f o g)(x) = f(g(x)): g applies first.
inline Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.degree() != g.degree()) throw std::domain_error("compose: degree mismatch");
    std::vector<int> img(f.degree());
    for (int x = 1; x <= f.degree(); ++x) img[x - 1] = f(g(x));
    return Permutation(std::move(img));
}

inline Permutation inverse(const Permutation& f) {
    std::vector<int> img(f.degree());
    for (int x = 1; x <= f.degree(); ++x) img[f(x) - 1] = x;
    return Permutation(std::move(img));
}

// Canonical disjoint cycles: each cycle starts at its smallest element,
// cycles ordered by that element.
inline CycleDecomposition cycles(const Permutation& f, bool include_fixpoints = false) {
    CycleDecomposition out;
    out.degree = f.degree();
    out.fixpoints_included = include_fixpoints;
    std::vector<bool> seen(f.degree(), false);
    for (int start = 1; start <= f.degree(); ++start) {
        if (seen[start - 1]) continue;
        std::vector<int> cyc;
        int x = start;
        do {
            seen[x - 1] = true;
            cyc.push_back(x);
            x = f(x);
        } while (x != start);
        if (cyc.size() > 1 || include_fixpoints) out.cycles.push_back(std::move(cyc));
    }
    return out;
}

inline Permutation from_cycle_decomposition(const CycleDecomposition& d) {
    return Permutation::from_cycles(d.degree, d.cycles);
}

// sign(f) = (-1)^{number of cycles of even length}.
inline int sign(const Permutation& f) {
    int even_cycles = 0;
    for (const auto& cyc : cycles(f, true).cycles)
        if (cyc.size() % 2 == 0) ++even_cycles;
    return even_cycles % 2 == 0 ? 1 : -1;
}

// Factorization into transpositions, rightmost applied first:
// (n1,...,nr) = (n1,nr) o ... o (n1,n2). Empty for the identity.
inline std::vector<std::pair<int, int>> to_transpositions(const Permutation& f) {
    std::vector<std::pair<int, int>> out;
    for (const auto& cyc : cycles(f, false).cycles)
        for (std::size_t i = cyc.size() - 1; i >= 1; --i) out.emplace_back(cyc[0], cyc[i]);
    return out;
}

// Left-multiplication embedding of a finite group into the permutations of
// its element indices: b maps to pi_b with b g_j = g_{pi_b(j)}.
// The table is validated as a group table first; the failed axiom is named.
inline std::vector<Permutation> cayley_embed(const std::vector<std::vector<int>>& table) {
    int n = static_cast<int>(table.size());
    if (n < 1) throw std::domain_error("cayley_embed: empty table");
    if (n > 12) throw std::domain_error("cayley_embed: table larger than 12 elements");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != n)
            throw std::domain_error("cayley_embed: table is not square");
    for (const auto& row : table)
        for (int v : row)
            if (v < 1 || v > n) throw std::domain_error("cayley_embed: entry out of range");

    // Latin square
    for (int i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int j = 0; j < n; ++j) {
            if (seen_row[table[i][j] - 1])
                throw std::domain_error("cayley_embed: row " + std::to_string(i + 1) +
                                        " is not a permutation");
            seen_row[table[i][j] - 1] = true;
            if (seen_col[table[j][i] - 1])
                throw std::domain_error("cayley_embed: column " + std::to_string(i + 1) +
                                        " is not a permutation");
            seen_col[table[j][i] - 1] = true;
        }
    }
    // two-sided identity
    int e = -1;
    for (int i = 0; i < n && e < 0; ++i) {
        bool ok = true;
        for (int j = 0; j < n; ++j)
            if (table[i][j] != j + 1 || table[j][i] != j + 1) ok = false;
        if (ok) e = i;
    }
    if (e < 0) throw std::domain_error("cayley_embed: no identity element");
    // associativity by exhaustion
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table[table[i][j] - 1][k] != table[i][table[j][k] - 1])
                    throw std::domain_error("cayley_embed: associativity fails at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            "," + std::to_string(k + 1) + ")");

    std::vector<Permutation> out;
    out.reserve(n);
    for (int b = 0; b < n; ++b) out.push_back(Permutation(table[b]));

    // homomorphism and injectivity, exhaustively
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!(out[table[a][b] - 1] == compose(out[a], out[b])))
                throw std::logic_error("cayley_embed: embedding is not a homomorphism");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (out[a] == out[b]) throw std::logic_error("cayley_embed: embedding not injective");
    return out;
}

}  // namespace zahl
