#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "zahl/contfrac.hpp"
#include "zahl/euclid.hpp"
#include "zahl/qform.hpp"
#include "zahl/rational.hpp"
#include "zahl/surd.hpp"

namespace zahl {

// Fixed-width ASCII table: columns joined
// by " | ", numeric columns right-aligned, one dashed separator line.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> headers, std::vector<bool> right_align = {})
        : headers_(std::move(headers)), right_(std::move(right_align)) {
        right_.resize(headers_.size(), true);
    }

    void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    std::string str() const {
        std::vector<std::size_t> width(headers_.size());
        for (std::size_t c = 0; c < headers_.size(); ++c) width[c] = headers_[c].size();
        for (const auto& row : rows_)
            for (std::size_t c = 0; c < row.size(); ++c)
                width[c] = std::max(width[c], row[c].size());

        auto emit = [&](const std::vector<std::string>& cells) {
            std::string line;
            for (std::size_t c = 0; c < headers_.size(); ++c) {
                std::string cell = c < cells.size() ? cells[c] : "";
                std::string pad(width[c] - cell.size(), ' ');
                if (c) line += " | ";
                line += right_[c] ? pad + cell : cell + pad;
            }
            // trim trailing spaces from left-aligned last columns
            while (!line.empty() && line.back() == ' ') line.pop_back();
            return line + "\n";
        };

        std::string out = emit(headers_);
        std::string sep;
        for (std::size_t c = 0; c < headers_.size(); ++c) {
            if (c) sep += "-+-";
            sep += std::string(width[c], '-');
        }
        out += sep + "\n";
        for (const auto& row : rows_) out += emit(row);
        return out;
    }

private:
    std::vector<std::string> headers_;
    std::vector<bool> right_;
    std::vector<std::vector<std::string>> rows_;
};

// The j / q_j / r_j scheme of the plain Euclidean algorithm.
inline std::string render_gcd_table(const ExtEuclidTrace& tr) {
    TextTable t({"j", "q_j", "r_j"});
    for (const auto& row : tr.rows)
        t.add_row({std::to_string(row.j), row.q ? row.q->str() : "---", row.r.str()});
    std::string out = t.str();
    out += "ggT(" + tr.a.str() + ", " + tr.b.str() + ") = " + tr.gcd().str() + "\n";
    return out;
}

// The five-column extended scheme with the Bezout footer.
inline std::string render_extgcd_table(const ExtEuclidTrace& tr) {
    TextTable t({"j", "q_j", "r_j", "s_j", "t_j"});
    for (const auto& row : tr.rows)
        t.add_row({std::to_string(row.j), row.q ? row.q->str() : "---", row.r.str(), row.s.str(),
                   row.t.str()});
    std::string out = t.str();
    Bezout bz = bezout(tr.a, tr.b);
    out += "ggT = " + bz.g.str() + "\n";
    out += bz.g.str() + " = " + bz.lambda.str() + "*" + tr.a.str() + " + " + bz.mu.str() + "*" +
           tr.b.str() + "\n";
    return out;
}

inline std::string render_fraction_list(const std::vector<Rational>& fractions) {
    std::string out;
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        if (i) out += " ";
        out += fractions[i].str_fraction();
    }
    return out + "\n";
}

// <p0,...,pk; per(c0,...,cl)> in plain ASCII.
inline std::string render_periodic_cf(const PeriodicCF& cf) {
    std::string out = "<";
    for (std::size_t i = 0; i < cf.preperiod.size(); ++i) {
        if (i) out += ",";
        out += cf.preperiod[i].str();
    }
    if (!cf.preperiod.empty()) out += "; ";
    out += "per(";
    for (std::size_t i = 0; i < cf.period.size(); ++i) {
        if (i) out += ",";
        out += cf.period[i].str();
    }
    return out + ")>";
}

inline std::string render_finite_cf(const FiniteCF& cf) {
    std::string out = "<";
    auto qs = cf.quotients();
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (i) out += ",";
        out += qs[i].str();
    }
    return out + ">";
}

// The j / x_j / q_j / s_j / t_j expansion table of a quadratic surd.
inline std::string render_surd_cf_table(const QuadraticSurd& x, std::size_t rows) {
    std::vector<QuadraticSurd> states;
    std::vector<Integer> quotients;
    QuadraticSurd state = x;
    for (std::size_t j = 0; j < rows; ++j) {
        states.push_back(state);
        CFStep step = cf_step(state);
        quotients.push_back(step.q);
        state = step.next;
    }
    Convergents conv = convergents_of(quotients);
    TextTable t({"j", "x_j", "q_j", "s_j", "t_j"}, {true, false, true, true, true});
    for (std::size_t j = 0; j < rows; ++j)
        t.add_row({std::to_string(j), states[j].str(), quotients[j].str(), conv.rows[j].s.str(),
                   conv.rows[j].t.str()});
    return t.str();
}

// The six-column reduction scheme, with the header line and the period note.
inline std::string render_reduction_table(const ReductionReport& rep) {
    std::ostringstream head;
    head << "F = (" << rep.input.str() << ")   D = " << rep.D << "   f = " << rep.f
         << "   q0 = " << rep.q0 << "\n";
    TextTable t({"j", "G_j", "q_j", "F_j", "T_j", "A_j"},
                {true, false, true, false, false, false});
    for (const auto& row : rep.rows)
        t.add_row({std::to_string(row.j), row.G.str(), row.q.str(), row.F_j.str(), row.T.str(),
                   row.A.str()});
    std::ostringstream tail;
    tail << "period: j* = " << rep.period_start << ", length " << rep.period_length << "\n";
    return head.str() + t.str() + tail.str();
}

}  // namespace zahl
