#include "ccnet/polytext.hpp"

#include <cctype>
#include <sstream>

namespace ccnet {

std::string var_name(const Signature& sig, int v) {
    int sv = sig.state_vars();
    if (v >= sv) return "l" + std::to_string(v - sv + 1);
    int off = 0;
    for (int j = 1; j <= sig.arity(); ++j) {
        int d = sig.slot_dims[static_cast<size_t>(j) - 1];
        if (v < off + d) {
            if (d == 1) return "X" + std::to_string(j);
            return "X" + std::to_string(j) + "_" + std::to_string(v - off + 1);
        }
        off += d;
    }
    throw internal_error("variable index out of signature");
}

static std::string mono_str(const Signature& sig, const Mono& m) {
    std::ostringstream os;
    bool first = true;
    for (size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!first) os << "*";
        os << var_name(sig, static_cast<int>(v));
        if (m[v] > 1) os << "^" << m[v];
        first = false;
    }
    return os.str();
}

std::string poly_str(const Signature& sig, const Poly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p) {
        Rat c = t.coeff;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        std::string vars = mono_str(sig, t.mono);
        if (vars.empty()) {
            os << rat_str(c);
        } else {
            if (c != 1) os << rat_str(c) << "*";
            os << vars;
        }
        first = false;
    }
    return os.str();
}

std::string polymap_str(const PolyMap& f) {
    if (f.sig.out_dim == 1) return poly_str(f.sig, f.comp[0]);
    std::ostringstream os;
    os << "(";
    for (size_t c = 0; c < f.comp.size(); ++c) {
        if (c) os << ", ";
        os << poly_str(f.sig, f.comp[c]);
    }
    os << ")";
    return os.str();
}

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    [[noreturn]] void fail(int l, int c, const std::string& msg) const {
        std::ostringstream os;
        os << "line " << l << ", column " << c << ": " << msg;
        throw validation_error(os.str());
    }
    [[noreturn]] void fail_here(const std::string& msg) const { fail(line, col, msg); }

    void advance() {
        if (text[pos] == '\n') { ++line; col = 1; } else { ++col; }
        ++pos;
    }
    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            advance();
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) { advance(); return true; }
        return false;
    }
    long read_natural(const char* what) {
        skip_space();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail_here(std::string("expected ") + what);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000000L) fail_here("number is too large");
            advance();
        }
        return v;
    }
};

struct Parser {
    Lexer lx;
    const Signature& sig;

    Parser(const std::string& text, const Signature& s) : lx(text), sig(s) {}

    Poly parse() {
        Poly p = expr();
        if (!lx.done()) lx.fail_here("unexpected trailing input");
        return p;
    }

    Poly expr() {
        bool neg = lx.eat('-');
        Poly p = term();
        if (neg) p = poly_neg(p);
        while (true) {
            if (lx.eat('+')) p = poly_add(p, term());
            else if (lx.eat('-')) p = poly_sub(p, term());
            else return p;
        }
    }

    Poly term() {
        Poly p = factor();
        while (lx.eat('*')) p = poly_mul(p, factor());
        return p;
    }

    Poly factor() {
        Poly p = atom();
        if (lx.eat('^')) {
            long e = lx.read_natural("an exponent");
            if (e > 64) lx.fail_here("exponent is too large");
            p = poly_pow(p, static_cast<int>(e), sig.total_vars());
        }
        return p;
    }

    Poly atom() {
        char c = lx.peek();
        int al = lx.line, ac = lx.col;
        if (c == '(') {
            lx.advance();
            Poly p = expr();
            if (!lx.eat(')')) lx.fail_here("expected ')'");
            return p;
        }
        if (c == '-') {  // unary minus inside a product: -(...), -X1
            lx.advance();
            return poly_neg(atom());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = lx.read_natural("a number");
            Rat r(num);
            if (lx.pos < lx.text.size() && lx.text[lx.pos] == '/') {
                lx.advance();
                long den = lx.read_natural("a denominator");
                if (den == 0) lx.fail(al, ac, "zero denominator");
                r = Rat(num, den);
                r.canonicalize();
            }
            return poly_const(r, sig.total_vars());
        }
        if (c == 'X') {
            lx.advance();
            long slot = lx.read_natural("a slot index after 'X'");
            if (slot < 1 || slot > sig.arity())
                lx.fail(al, ac, "slot X" + std::to_string(slot) + " out of range (arity " +
                                    std::to_string(sig.arity()) + ")");
            int dim = sig.slot_dims[static_cast<size_t>(slot) - 1];
            long comp = 1;
            if (lx.pos < lx.text.size() && lx.text[lx.pos] == '_') {
                lx.advance();
                comp = lx.read_natural("a component index after '_'");
                if (dim == 1)
                    lx.fail(al, ac, "slot X" + std::to_string(slot) +
                                        " is one-dimensional; write it without '_'");
                if (comp < 1 || comp > dim)
                    lx.fail(al, ac, "component " + std::to_string(comp) + " out of range for X" +
                                        std::to_string(slot));
            } else if (dim > 1) {
                lx.fail(al, ac, "slot X" + std::to_string(slot) + " has dimension " +
                                    std::to_string(dim) + "; write X" + std::to_string(slot) +
                                    "_<component>");
            }
            return poly_var(sig.var(static_cast<int>(slot), static_cast<int>(comp)),
                            sig.total_vars());
        }
        if (c == 'l') {
            lx.advance();
            long idx = lx.read_natural("a parameter index after 'l'");
            if (idx < 1 || idx > sig.params)
                lx.fail(al, ac, "parameter l" + std::to_string(idx) + " out of range (" +
                                    std::to_string(sig.params) + " parameters)");
            return poly_var(sig.param_var(static_cast<int>(idx)), sig.total_vars());
        }
        if (c == '\0') lx.fail_here("unexpected end of expression");
        lx.fail_here(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Poly parse_poly(const std::string& text, const Signature& sig) {
    Parser p(text, sig);
    return p.parse();
}

PolyMap parse_polymap(const std::vector<std::string>& texts, const Signature& sig) {
    if (static_cast<int>(texts.size()) != sig.out_dim)
        throw validation_error("expected " + std::to_string(sig.out_dim) +
                               " component expression(s), got " + std::to_string(texts.size()));
    PolyMap f = zero_map(sig);
    for (size_t c = 0; c < texts.size(); ++c) {
        try {
            f.comp[c] = parse_poly(texts[c], sig);
        } catch (const validation_error& e) {
            if (sig.out_dim == 1) throw;
            throw validation_error("component " + std::to_string(c + 1) + ": " + e.what());
        }
    }
    return f;
}

} // namespace ccnet
