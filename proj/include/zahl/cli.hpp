#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zahl/arithfun.hpp"
#include "zahl/contfrac.hpp"
#include "zahl/euclid.hpp"
#include "zahl/factor.hpp"
#include "zahl/farey.hpp"
#include "zahl/integer.hpp"
#include "zahl/modular.hpp"
#include "zahl/perm.hpp"
#include "zahl/qform.hpp"
#include "zahl/quadres.hpp"
#include "zahl/rational.hpp"
#include "zahl/render.hpp"
#include "zahl/surd.hpp"

namespace zahl::cli {

using nlohmann::json;

// Syntax error with the offending position in the input text.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("at position " + std::to_string(position) + ": " + message),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Integer parse_integer(const std::string& text) {
    if (text.empty()) throw ParseError(0, "expected an integer");
    std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
    if (i == text.size()) throw ParseError(i, "expected digits");
    for (std::size_t k = i; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw ParseError(k, "expected a digit, got '" + std::string(1, text[k]) + "'");
    Integer v(text.substr(i));
    return text[0] == '-' ? Integer(-v) : v;
}

inline Rational parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError(slash + 1, "zero denominator");
    return Rational(num, den);
}

// A parsed surd input together with the denominator extension that was
// applied to reach the (sqrt(D) - b) / (2a) normal form.
struct SurdSpec {
    QuadraticSurd value;
    Integer scale;  // 1 when the input was already in normal form
};

namespace detail {

// Normalize (sqrt(D0) - b0) / d0 by the smallest factor lambda that makes
// the denominator even and 2*d0 | lambda*(b0^2 - D0).
inline SurdSpec normalize_surd(const Integer& b0, const Integer& d0, const Integer& D0,
                               std::size_t radicand_pos) {
    if (D0 < 1) throw std::domain_error("surd: radicand must be positive");
    if (is_square(D0)) throw std::domain_error("surd: radicand " + D0.str() + " is a square");
    if (d0 == 0) throw std::domain_error("surd: zero denominator");
    Integer lambda1 = d0 % 2 == 0 ? 1 : 2;
    Integer diff = b0 * b0 - D0;  // nonzero since D0 is not a square
    Integer lambda2 = 2 * abs(d0) / gcd(2 * d0, diff);
    Integer lambda = lcm(lambda1, lambda2);
    return {QuadraticSurd(lambda * d0 / 2, lambda * b0, lambda * lambda * D0), lambda};
}

struct Scanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_spaces() {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    }
    bool consume(const std::string& lit) {
        skip_spaces();
        if (text.compare(pos, lit.size(), lit) == 0) {
            pos += lit.size();
            return true;
        }
        return false;
    }
    void expect(const std::string& lit) {
        if (!consume(lit)) throw ParseError(pos, "expected '" + lit + "'");
    }
    Integer integer() {
        skip_spaces();
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError(pos, "expected an integer");
        Integer v(text.substr(digits, pos - digits));
        return negative ? Integer(-v) : v;
    }
    void expect_end() {
        skip_spaces();
        if (pos != text.size()) throw ParseError(pos, "trailing input");
    }
};

}  // namespace detail

// Grammar: "sqrt(N)" | "(sqrt(N)+p)/q" | "(sqrt(N)-p)/q" | "a,b,D" | INT | FRAC.
// Rational inputs parse but are rejected as values: a quadratic surd is
// required. The representation is extended automatically so that
// 4a | b^2 - D; the factor used is reported in the result.
inline SurdSpec parse_surd(const std::string& text) {
    detail::Scanner s{text};
    if (text.find(',') != std::string::npos) {
        Integer a = s.integer();
        s.expect(",");
        Integer b = s.integer();
        s.expect(",");
        Integer D = s.integer();
        s.expect_end();
        if (a == 0) throw std::domain_error("surd: a must be nonzero");
        // (sqrt(D) - b) / (2a) as (sqrt(D) - b) / d with d = 2a
        return detail::normalize_surd(b, 2 * a, D, 0);
    }
    if (s.consume("sqrt(")) {
        std::size_t radicand_pos = s.pos;
        Integer N = s.integer();
        s.expect(")");
        s.expect_end();
        return detail::normalize_surd(0, 1, N, radicand_pos);
    }
    if (s.consume("(")) {
        s.expect("sqrt(");
        std::size_t radicand_pos = s.pos;
        Integer N = s.integer();
        s.expect(")");
        s.skip_spaces();
        if (s.pos >= text.size() || (text[s.pos] != '+' && text[s.pos] != '-'))
            throw ParseError(s.pos, "expected '+' or '-'");
        Integer p = s.integer();  // sign is part of the integer
        s.expect(")");
        s.expect("/");
        Integer q = s.integer();
        s.expect_end();
        // (sqrt(N) + p) / q = (sqrt(N) - (-p)) / q
        return detail::normalize_surd(-p, q, N, radicand_pos);
    }
    // INT or FRAC: syntactically fine, semantically not a surd
    s.integer();
    if (s.consume("/")) s.integer();
    s.expect_end();
    throw std::domain_error("surd: input is rational, expected a quadratic irrational");
}

// Cycle notation "( 1 2 )( 4 6 5 )", optionally wrapped in [...]; "[]" or ""
// is the identity.
inline Permutation parse_cycles(const std::string& text, int degree) {
    detail::Scanner s{text};
    std::vector<std::vector<int>> cycles;
    s.consume("[");
    for (;;) {
        s.skip_spaces();
        if (!s.consume("(")) break;
        std::vector<int> cyc;
        for (;;) {
            s.skip_spaces();
            if (s.consume(")")) break;
            s.consume(",");
            Integer v = s.integer();
            if (v < 1 || v > degree)
                throw ParseError(s.pos, "cycle entry out of range 1.." + std::to_string(degree));
            cyc.push_back(v.convert_to<int>());
        }
        if (cyc.empty()) throw ParseError(s.pos, "empty cycle");
        cycles.push_back(std::move(cyc));
    }
    s.consume("]");
    s.expect_end();
    return Permutation::from_cycles(degree, cycles);
}

namespace detail {

inline json rational_json(const Rational& r) { return r.str_fraction(); }

inline json form_json(const Form& F) { return json::array({F.a.str(), F.b.str(), F.c.str()}); }

inline json matrix_json(const UniMatrix& M) {
    return json::array({json::array({M.a11.str(), M.a12.str()}),
                        json::array({M.a21.str(), M.a22.str()})});
}

inline json quotients_json(const std::vector<Integer>& qs) {
    json out = json::array();
    for (const Integer& q : qs) out.push_back(q.str());
    return out;
}

struct Invocation {
    std::vector<std::string> positional;
    std::map<std::string, std::string> options;  // --key value (only for known keys)
    bool json_mode = false;
    bool table = false;
    bool twin = false;
    bool all_solutions = false;

    const std::string& arg(std::size_t i) const {
        if (i >= positional.size()) throw UsageError("missing argument");
        return positional[i];
    }
    void expect_args(std::size_t n) const {
        if (positional.size() != n)
            throw UsageError("expected " + std::to_string(n) + " arguments, got " +
                             std::to_string(positional.size()));
    }
};

inline Invocation parse_invocation(const std::vector<std::string>& args, std::size_t start) {
    Invocation inv;
    for (std::size_t i = start; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--json")
            inv.json_mode = true;
        else if (a == "--table")
            inv.table = true;
        else if (a == "--twin")
            inv.twin = true;
        else if (a == "--all-solutions")
            inv.all_solutions = true;
        else if (a == "--fn" || a == "--upto") {
            if (i + 1 >= args.size()) throw UsageError("option " + a + " needs a value");
            inv.options[a] = args[++i];
        } else if (a.rfind("--", 0) == 0)
            throw UsageError("unknown option " + a);
        else
            inv.positional.push_back(a);
    }
    return inv;
}

inline void emit(std::ostream& out, const Invocation& inv, const std::string& text,
                 const json& payload) {
    if (inv.json_mode)
        out << payload.dump(2) << "\n";
    else
        out << text;
}

inline int run_gcd(const Invocation& inv, std::ostream& out) {
    inv.expect_args(2);
    ExtEuclidTrace tr = ext_gcd(parse_integer(inv.arg(0)), parse_integer(inv.arg(1)));
    json rows = json::array();
    for (const auto& row : tr.rows)
        rows.push_back({{"j", row.j}, {"q", row.q ? json(row.q->str()) : json(nullptr)},
                        {"r", row.r.str()}});
    json payload{{"command", "gcd"}, {"a", tr.a.str()}, {"b", tr.b.str()},
                 {"gcd", tr.gcd().str()}, {"n_star", tr.n_star}, {"rows", rows}};
    emit(out, inv, render_gcd_table(tr), payload);
    return 0;
}

inline int run_extgcd(const Invocation& inv, std::ostream& out) {
    inv.expect_args(2);
    ExtEuclidTrace tr = ext_gcd(parse_integer(inv.arg(0)), parse_integer(inv.arg(1)));
    Bezout bz = bezout(tr.a, tr.b);
    json rows = json::array();
    for (const auto& row : tr.rows)
        rows.push_back({{"j", row.j}, {"q", row.q ? json(row.q->str()) : json(nullptr)},
                        {"r", row.r.str()}, {"s", row.s.str()}, {"t", row.t.str()}});
    json payload{{"command", "extgcd"}, {"a", tr.a.str()}, {"b", tr.b.str()},
                 {"gcd", tr.gcd().str()}, {"n_star", tr.n_star},
                 {"lambda", bz.lambda.str()}, {"mu", bz.mu.str()}, {"rows", rows}};
    emit(out, inv, render_extgcd_table(tr), payload);
    return 0;
}

inline int run_cf(const Invocation& inv, std::ostream& out) {
    const std::string& sub = inv.arg(0);
    if (sub == "rat") {
        inv.expect_args(2);
        Rational x = parse_rational(inv.arg(1));
        FiniteCF cf = cf_of_rational(x, !inv.twin);
        json payload{{"command", "cf rat"}, {"value", x.str_fraction()},
                     {"canonical", !inv.twin}, {"quotients", quotients_json(cf.quotients())}};
        emit(out, inv, x.str() + " = " + render_finite_cf(cf) + "\n", payload);
        return 0;
    }
    if (sub == "surd") {
        inv.expect_args(2);
        SurdSpec spec = parse_surd(inv.arg(1));
        PeriodicCF cf = cf_of_surd(spec.value);
        std::string text;
        if (spec.scale != 1)
            text += "representation extended by factor " + spec.scale.str() + ": " +
                    spec.value.str() + "\n";
        text += spec.value.str() + " = " + render_periodic_cf(cf) + "\n";
        if (inv.table)
            text += render_surd_cf_table(spec.value,
                                         cf.preperiod.size() + 2 * cf.period.size() + 1);
        json payload{{"command", "cf surd"},
                     {"surd", {{"a", spec.value.a().str()}, {"b", spec.value.b().str()},
                               {"D", spec.value.D().str()}}},
                     {"scale", spec.scale.str()},
                     {"preperiod", quotients_json(cf.preperiod)},
                     {"period", quotients_json(cf.period)}};
        emit(out, inv, text, payload);
        return 0;
    }
    if (sub == "best") {
        inv.expect_args(3);
        SurdSpec spec = parse_surd(inv.arg(1));
        Integer jmax = parse_integer(inv.arg(2));
        Convergents conv = best_approximations(spec.value, jmax.convert_to<std::size_t>());
        std::vector<Rational> fractions;
        for (std::size_t j = 1; j < conv.rows.size(); ++j) fractions.push_back(conv.value(j));
        json rows = json::array();
        for (std::size_t j = 0; j < conv.rows.size(); ++j)
            rows.push_back({{"j", j}, {"s", conv.rows[j].s.str()}, {"t", conv.rows[j].t.str()}});
        json payload{{"command", "cf best"}, {"rows", rows}};
        emit(out, inv, render_fraction_list(fractions), payload);
        return 0;
    }
    throw UsageError("cf: unknown subcommand '" + sub + "' (rat, surd, best)");
}

inline int run_farey(const Invocation& inv, std::ostream& out) {
    const std::string& sub = inv.arg(0);
    if (sub == "section") {
        inv.expect_args(4);
        Rational lo = parse_rational(inv.arg(1));
        Rational hi = parse_rational(inv.arg(2));
        Integer n = parse_integer(inv.arg(3));
        auto fractions = section(lo, hi, n);
        json list = json::array();
        for (const Rational& r : fractions) list.push_back(rational_json(r));
        json payload{{"command", "farey section"}, {"order", n.str()}, {"fractions", list}};
        emit(out, inv, render_fraction_list(fractions), payload);
        return 0;
    }
    if (sub == "approx") {
        inv.expect_args(3);
        SurdSpec spec = parse_surd(inv.arg(1));
        Integer n = parse_integer(inv.arg(2));
        FareyPair pair = farey_approx(spec.value, n);
        json payload{{"command", "farey approx"}, {"order", n.str()},
                     {"left", rational_json(pair.left)}, {"right", rational_json(pair.right)}};
        emit(out, inv,
             pair.left.str_fraction() + " < " + spec.value.str() + " < " +
                 pair.right.str_fraction() + "\n",
             payload);
        return 0;
    }
    throw UsageError("farey: unknown subcommand '" + sub + "' (section, approx)");
}

inline int run_arith(const Invocation& inv, std::ostream& out) {
    if (inv.arg(0) != "table") throw UsageError("arith: unknown subcommand (table)");
    inv.expect_args(1);
    auto fn_it = inv.options.find("--fn");
    auto upto_it = inv.options.find("--upto");
    if (fn_it == inv.options.end() || upto_it == inv.options.end())
        throw UsageError("arith table: need --fn and --upto");
    Integer upto = parse_integer(upto_it->second);
    if (upto < 1) throw std::domain_error("arith table: --upto must be >= 1");
    std::size_t N = upto.convert_to<std::size_t>();

    std::vector<std::string> names;
    std::string list = fn_it->second;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        std::size_t comma = list.find(',', pos);
        if (comma == std::string::npos) comma = list.size();
        names.push_back(list.substr(pos, comma - pos));
        pos = comma + 1;
    }

    std::map<std::string, ArithFn (*)(std::size_t)> builders{
        {"mu", mu_table},   {"phi", phi_table}, {"tau", tau_table},
        {"eps", epsilon_table}, {"one", one_table}, {"id", ident_table}};
    std::vector<std::string> headers{"n"};
    for (std::size_t n = 1; n <= N; ++n) headers.push_back(Integer(n).str());
    TextTable t(headers);
    json table;
    for (const std::string& name : names) {
        auto it = builders.find(name);
        if (it == builders.end())
            throw UsageError("arith table: unknown function '" + name +
                             "' (mu, phi, tau, eps, one, id)");
        ArithFn fn = it->second(N);
        std::vector<std::string> row{name};
        json values = json::array();
        for (std::size_t n = 1; n <= N; ++n) {
            row.push_back(fn(n).str());
            values.push_back(fn(n).str());
        }
        t.add_row(row);
        table[name] = values;
    }
    json payload{{"command", "arith table"}, {"upto", N}, {"functions", table}};
    emit(out, inv, t.str(), payload);
    return 0;
}

inline int run_mod(const Invocation& inv, std::ostream& out) {
    const std::string& sub = inv.arg(0);
    if (sub == "inv") {
        inv.expect_args(3);
        Residue r = mod_inverse(parse_integer(inv.arg(1)), parse_integer(inv.arg(2)));
        json payload{{"command", "mod inv"}, {"value", r.value.str()},
                     {"modulus", r.modulus.str()}};
        emit(out, inv, r.value.str() + "\n", payload);
        return 0;
    }
    if (sub == "order") {
        inv.expect_args(3);
        Integer h = order(parse_integer(inv.arg(1)), parse_integer(inv.arg(2)));
        json payload{{"command", "mod order"}, {"value", h.str()}};
        emit(out, inv, h.str() + "\n", payload);
        return 0;
    }
    if (sub == "primroot") {
        inv.expect_args(2);
        auto root = primitive_root(parse_integer(inv.arg(1)));
        json payload{{"command", "mod primroot"},
                     {"root", root ? json(root->str()) : json(nullptr)}};
        emit(out, inv, root ? root->str() + "\n" : "none\n", payload);
        return 0;
    }
    if (sub == "crt") {
        if (inv.positional.size() < 3 || inv.positional.size() % 2 == 0)
            throw UsageError("mod crt: need residue/modulus pairs");
        std::vector<std::pair<Integer, Integer>> congruences;
        for (std::size_t i = 1; i < inv.positional.size(); i += 2)
            congruences.push_back({parse_integer(inv.arg(i)), parse_integer(inv.arg(i + 1))});
        Residue r = crt(congruences);
        json payload{{"command", "mod crt"}, {"value", r.value.str()},
                     {"modulus", r.modulus.str()}};
        emit(out, inv, "x = " + r.value.str() + " (mod " + r.modulus.str() + ")\n", payload);
        return 0;
    }
    throw UsageError("mod: unknown subcommand '" + sub + "' (inv, order, primroot, crt)");
}

inline int run_qr(const Invocation& inv, std::ostream& out) {
    const std::string& sub = inv.arg(0);
    auto symbol_text = [](int s) { return s > 0 ? "+1" : (s < 0 ? "-1" : "0"); };
    if (sub == "legendre" || sub == "jacobi") {
        inv.expect_args(3);
        Integer top = parse_integer(inv.arg(1));
        Integer bottom = parse_integer(inv.arg(2));
        int s = sub == "legendre" ? legendre(top, bottom) : jacobi(top, bottom);
        json payload{{"command", "qr " + sub}, {"symbol", s}};
        emit(out, inv, std::string(symbol_text(s)) + "\n", payload);
        return 0;
    }
    if (sub == "sqrtmod") {
        inv.expect_args(3);
        Integer a = parse_integer(inv.arg(1));
        Integer m = parse_integer(inv.arg(2));
        auto roots = sqrt_mod(a, m);
        std::string text = Integer(roots.size()).str() + " solutions (mod " + m.str() + ")\n";
        if (inv.all_solutions && !roots.empty()) {
            text += "x =";
            for (const Integer& x : roots) text += " " + x.str();
            text += "\n";
        }
        json list = json::array();
        for (const Integer& x : roots) list.push_back(x.str());
        json payload{{"command", "qr sqrtmod"}, {"a", a.str()}, {"m", m.str()},
                     {"count", roots.size()}, {"solutions", list}};
        emit(out, inv, text, payload);
        return 0;
    }
    if (sub == "count") {
        inv.expect_args(3);
        Integer c = count_sqrt_solutions(parse_integer(inv.arg(1)), parse_integer(inv.arg(2)));
        json payload{{"command", "qr count"}, {"count", c.str()}};
        emit(out, inv, c.str() + "\n", payload);
        return 0;
    }
    throw UsageError("qr: unknown subcommand '" + sub + "' (legendre, jacobi, sqrtmod, count)");
}

inline int run_qform(const Invocation& inv, std::ostream& out) {
    const std::string& sub = inv.arg(0);
    auto form_at = [&](std::size_t i) {
        return Form{parse_integer(inv.arg(i)), parse_integer(inv.arg(i + 1)),
                    parse_integer(inv.arg(i + 2))};
    };
    if (sub == "reduce") {
        inv.expect_args(4);
        ReductionReport rep = reduce(form_at(1));
        json rows = json::array();
        for (const auto& row : rep.rows)
            rows.push_back({{"j", row.j}, {"G", form_json(row.G)}, {"q", row.q.str()},
                            {"F", form_json(row.F_j)}, {"T", matrix_json(row.T)},
                            {"A", matrix_json(row.A)}});
        json payload{{"command", "qform reduce"}, {"form", form_json(rep.input)},
                     {"D", rep.D.str()}, {"f", rep.f.str()}, {"q0", rep.q0.str()},
                     {"period_start", rep.period_start}, {"period_length", rep.period_length},
                     {"rows", rows}};
        emit(out, inv, render_reduction_table(rep), payload);
        return 0;
    }
    if (sub == "pell") {
        inv.expect_args(2);
        PellSolution p = pell(parse_integer(inv.arg(1)));
        json payload{{"command", "qform pell"}, {"t", p.t.str()}, {"u", p.u.str()}};
        emit(out, inv, "t = " + p.t.str() + ", u = " + p.u.str() + "\n", payload);
        return 0;
    }
    if (sub == "auto") {
        inv.expect_args(4);
        UniMatrix A = automorphism_from_period(form_at(1));
        json payload{{"command", "qform auto"}, {"matrix", matrix_json(A)}};
        emit(out, inv, A.str() + "\n", payload);
        return 0;
    }
    if (sub == "equiv") {
        inv.expect_args(7);
        auto witness = properly_equivalent(form_at(1), form_at(4));
        json payload{{"command", "qform equiv"}, {"equivalent", witness.has_value()},
                     {"witness", witness ? matrix_json(*witness) : json(nullptr)}};
        emit(out, inv,
             witness ? "equivalent via " + witness->str() + "\n" : std::string("not equivalent\n"),
             payload);
        return 0;
    }
    throw UsageError("qform: unknown subcommand '" + sub + "' (reduce, pell, auto, equiv)");
}

inline int run_perm(const Invocation& inv, std::ostream& out) {
    const std::string& sub = inv.arg(0);
    if (sub == "sign") {
        inv.expect_args(3);
        int degree = parse_integer(inv.arg(1)).convert_to<int>();
        Permutation f = parse_cycles(inv.arg(2), degree);
        int s = sign(f);
        json payload{{"command", "perm sign"}, {"sign", s}};
        emit(out, inv, std::string(s > 0 ? "+1" : "-1") + "\n", payload);
        return 0;
    }
    if (sub == "cycles") {
        inv.expect_args(3);
        int degree = parse_integer(inv.arg(1)).convert_to<int>();
        Permutation f = parse_cycles(inv.arg(2), degree);
        CycleDecomposition d = cycles(f, false);
        json cyc = json::array();
        for (const auto& c : d.cycles) cyc.push_back(c);
        json payload{{"command", "perm cycles"}, {"degree", degree}, {"cycles", cyc},
                     {"images", f.images()}};
        emit(out, inv, d.str() + "\n", payload);
        return 0;
    }
    if (sub == "compose") {
        inv.expect_args(4);
        int degree = parse_integer(inv.arg(1)).convert_to<int>();
        Permutation f = parse_cycles(inv.arg(2), degree);
        Permutation g = parse_cycles(inv.arg(3), degree);
        Permutation fg = compose(f, g);
        json payload{{"command", "perm compose"}, {"degree", degree},
                     {"images", fg.images()},
                     {"cycles", json(cycles(fg, false).cycles)}};
        emit(out, inv, cycles(fg, false).str() + "\n", payload);
        return 0;
    }
    throw UsageError("perm: unknown subcommand '" + sub + "' (sign, cycles, compose)");
}

}  // namespace detail

inline const char* usage_text() {
    return "usage: zahl <command> [args] [--json]\n"
           "  gcd A B                     Euclidean scheme\n"
           "  extgcd A B                  extended Euclidean scheme\n"
           "  cf rat P/Q [--twin]         continued fraction of a rational\n"
           "  cf surd X [--table]         periodic continued fraction of a surd\n"
           "  cf best X JMAX              best rational approximations\n"
           "  farey section LO HI N       Farey fractions in [LO, HI]\n"
           "  farey approx X N            enclosing Farey neighbors of a surd\n"
           "  arith table --fn F,... --upto N\n"
           "  mod inv|order A N, mod primroot N, mod crt A1 N1 [A2 N2 ...]\n"
           "  qr legendre A P, qr jacobi P Q, qr sqrtmod A M [--all-solutions], qr count A M\n"
           "  qform reduce A B C, qform pell D, qform auto A B C, qform equiv A B C A' B' C'\n"
           "  perm sign|cycles N CYCLES, perm compose N F G\n"
           "surd syntax: sqrt(N) | (sqrt(N)+P)/Q | a,b,D\n";
}

// Dispatch. Exit code 0 on success, 1 on domain errors, 2 on usage errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty()) throw UsageError("no command given");
        detail::Invocation inv = detail::parse_invocation(args, 1);
        const std::string& cmd = args[0];
        if (cmd == "help" || cmd == "--help") {
            out << usage_text();
            return 0;
        }
        if (cmd == "gcd") return detail::run_gcd(inv, out);
        if (cmd == "extgcd") return detail::run_extgcd(inv, out);
        if (cmd == "cf") return detail::run_cf(inv, out);
        if (cmd == "farey") return detail::run_farey(inv, out);
        if (cmd == "arith") return detail::run_arith(inv, out);
        if (cmd == "mod") return detail::run_mod(inv, out);
        if (cmd == "qr") return detail::run_qr(inv, out);
        if (cmd == "qform") return detail::run_qform(inv, out);
        if (cmd == "perm") return detail::run_perm(inv, out);
        throw UsageError("unknown command '" + cmd + "'");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n" << usage_text();
        return 2;
    } catch (const ParseError& e) {
        err << "parse error " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace zahl::cli
