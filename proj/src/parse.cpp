#include "polydisc/parse.hpp"

#include <cctype>
#include <sstream>

namespace polydisc {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected ") + what, pos);
    }

    Integer integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", pos);
        return Integer(s.substr(start, pos - start));
    }

    Rational rational(bool allow_sign) {
        bool neg = false;
        if (allow_sign) {
            if (accept('-'))
                neg = true;
            else
                accept('+');
        }
        Integer num = integer();
        Integer den = 1;
        if (accept('/')) {
            den = integer();
            if (den == 0) throw ParseError("zero denominator", pos);
        }
        Rational q(num, den);
        q.canonicalize();
        return neg ? Rational(-q) : q;
    }

    // (a/b+c/di) | (a/b-c/di)
    GaussianRational complex_literal() {
        expect('(', "'('");
        Rational re = rational(true);
        skip_ws();
        if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-'))
            throw ParseError("expected sign in complex literal", pos);
        bool neg = s[pos] == '-';
        ++pos;
        Rational im = rational(false);
        expect('i', "'i'");
        expect(')', "')'");
        return {re, neg ? Rational(-im) : im};
    }

    // Xk[^e]; returns (zero-based index, exponent)
    std::pair<int, unsigned> variable_factor() {
        expect('X', "variable");
        Integer idx = integer();
        if (idx < 1 || idx > 64) throw ParseError("variable index out of range", pos);
        unsigned e = 1;
        if (accept('^')) {
            skip_ws();
            if (pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
                throw ParseError("exponent must be a nonnegative integer", pos);
            Integer ei = integer();
            if (ei > 100000) throw ParseError("exponent too large", pos);
            e = static_cast<unsigned>(ei.get_ui());
        }
        return {static_cast<int>(idx.get_ui()) - 1, e};
    }
};

struct RawTerm {
    GaussianRational coeff;
    std::map<int, unsigned> exps;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::optional<int> nvars) {
    Cursor c{text};
    std::vector<RawTerm> terms;
    int max_var = 0;

    bool first = true;
    while (!c.done()) {
        bool neg = false;
        if (c.accept('-'))
            neg = true;
        else if (c.accept('+')) {
            if (first) throw ParseError("unexpected '+'", c.pos);
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", c.pos);
        }
        first = false;

        RawTerm t;
        t.coeff = GaussianRational(1);
        bool have_any = false;

        char p = c.peek();
        if (p == '(') {
            t.coeff = c.complex_literal();
            have_any = true;
        } else if (std::isdigit(static_cast<unsigned char>(p))) {
            t.coeff = GaussianRational(c.rational(false));
            have_any = true;
        }

        bool expect_star = have_any;
        while (true) {
            if (expect_star) {
                if (!c.accept('*')) break;
            }
            if (c.peek() != 'X') {
                if (expect_star) throw ParseError("expected variable after '*'", c.pos);
                break;
            }
            auto [j, e] = c.variable_factor();
            t.exps[j] += e;
            max_var = std::max(max_var, j + 1);
            have_any = true;
            expect_star = true;
        }
        if (!have_any) throw ParseError("empty term", c.pos);
        if (neg) t.coeff = -t.coeff;
        terms.push_back(std::move(t));
    }

    int n = nvars.value_or(max_var);
    if (n < max_var) throw ParseError("variable index exceeds declared arity", 0);

    Polynomial f(n);
    for (const auto& t : terms) {
        Monomial m = mono_one(n);
        for (const auto& [j, e] : t.exps) m[static_cast<size_t>(j)] += e;
        f.add_term(m, t.coeff);
    }
    return f;
}

std::string to_string(const Monomial& m) {
    std::ostringstream os;
    bool any = false;
    for (size_t j = 0; j < m.size(); ++j) {
        if (m[j] == 0) continue;
        if (any) os << '*';
        os << 'X' << (j + 1);
        if (m[j] > 1) os << '^' << m[j];
        any = true;
    }
    return any ? os.str() : std::string();
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";

    // grevlex-descending listing
    MonomialOrder order = MonomialOrder::grevlex(f.nvars());
    std::vector<const std::pair<const Monomial, GaussianRational>*> items;
    for (const auto& t : f.terms()) items.push_back(&t);
    std::sort(items.begin(), items.end(),
              [&](auto* a, auto* b) { return order.less(b->first, a->first); });

    std::ostringstream os;
    bool first = true;
    for (auto* t : items) {
        const GaussianRational& c = t->second;
        std::string mono = to_string(t->first);
        if (c.is_real()) {
            Rational q = c.re;
            bool neg = q < 0;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            Rational a = abs(q);
            if (mono.empty())
                os << to_string(a);
            else if (a == 1)
                os << mono;
            else
                os << to_string(a) << '*' << mono;
        } else {
            if (!first) os << " + ";
            os << to_string(c);
            if (!mono.empty()) os << '*' << mono;
        }
        first = false;
    }
    return os.str();
}

}  // namespace polydisc
