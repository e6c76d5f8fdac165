#include "bdiag/parse.hpp"

#include <cctype>

namespace bdiag {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i]))
            i++;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            i++;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw Error("parse error at offset " + std::to_string(i) + ": " + msg);
    }
};

Expr parse_factor(Cursor& c) {
    c.skip();
    if (c.eat('[')) {
        Expr a = parse_factor(c);
        if (!c.eat(','))
            c.fail("expected ','");
        Expr b = parse_factor(c);
        if (!c.eat(']'))
            c.fail("expected ']'");
        return Expr::make_bracket(std::move(a), std::move(b));
    }
    if (!std::isdigit((unsigned char)c.peek()))
        c.fail("expected point or '['");
    int p = 0;
    while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i]))
        p = p * 10 + (c.s[c.i++] - '0');
    if (p < 1)
        c.fail("points are positive");
    bool star = c.eat('*');
    return Expr::make_leaf(make_gen(p, star));
}

Expr parse_diagram_cursor(Cursor& c, Parity mode) {
    char sep = mode == Parity::odd_d ? '.' : '^';
    std::vector<Expr> fs;
    fs.push_back(parse_factor(c));
    while (c.eat(sep))
        fs.push_back(parse_factor(c));
    if (fs.size() == 1)
        return std::move(fs[0]);
    return Expr::make_product(std::move(fs));
}

Int parse_coef(Cursor& c) {
    c.skip();
    std::string num;
    while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i]))
        num += c.s[c.i++];
    if (num.empty())
        return Int(1);
    c.eat('*');
    return Int::from_string(num);
}

}  // namespace

Expr parse_diagram_expr(const std::string& text, Parity mode) {
    Cursor c{text};
    Expr e = parse_diagram_cursor(c, mode);
    c.skip();
    if (c.i != text.size())
        c.fail("trailing input");
    return e;
}

Element parse_diagram(const std::string& text, Parity mode) {
    return canonicalize(parse_diagram_expr(text, mode), mode);
}

Element parse_element(const std::string& text, Parity mode) {
    Cursor c{text};
    Element out(mode);
    bool first = true;
    while (true) {
        c.skip();
        if (c.i == text.size())
            break;
        Int sign(1);
        if (c.eat('-'))
            sign = Int(-1);
        else if (c.eat('+')) {
        } else if (!first) {
            c.fail("expected '+' or '-'");
        }
        Int coef = parse_coef(c);
        if (c.peek() == '\0' && coef != Int(1)) {
            // bare integer: only the constant 0 is allowed
            if (coef.is_zero())
                break;
            c.fail("bare coefficient");
        }
        Expr d = parse_diagram_cursor(c, mode);
        out += canonicalize(d, mode) * (sign * coef);
        first = false;
    }
    return out;
}

std::string format_mono(const Mono& m, Parity mode) {
    if (m.factors.empty())
        return "1";
    std::string sep = mode == Parity::odd_d ? "." : "^";
    std::string out;
    for (size_t fi = 0; fi < m.factors.size(); fi++) {
        if (fi)
            out += sep;
        const Word& w = m.factors[fi];
        std::string piece = std::to_string(gen_point(w[0])) + (gen_star(w[0]) ? "*" : "");
        for (size_t k = 1; k < w.size(); k++)
            piece = "[" + piece + "," + std::to_string(gen_point(w[k])) + (gen_star(w[k]) ? "*" : "") + "]";
        out += piece;
    }
    return out;
}

template <class C>
static std::string format_impl(const ElementT<C>& e) {
    if (e.is_zero())
        return "0";
    std::string out;
    for (const auto& [m, c] : e.terms()) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg)
            cs = cs.substr(1);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (cs != "1")
            out += cs + "*";
        out += format_mono(m, e.mode());
    }
    return out;
}

std::string format_element(const Element& e) { return format_impl(e); }
std::string format_element(const ElementQ& e) { return format_impl(e); }

}  // namespace bdiag
