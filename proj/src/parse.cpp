#include "aode/parse.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

#include "aode/factor.hpp"

namespace aode {

ParseError::ParseError(const std::string& msg, int line_, int column_)
    : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + msg),
      line(line_),
      column(column_) {}

namespace {

using Exp = std::pair<Rational, Rational>;

struct ExpLess {
    bool operator()(const Exp& a, const Exp& b) const {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    }
};

using Sparse = std::map<Exp, Elem, ExpLess>;

enum class Mode { equation, truncation, constant, rootof };

const char* kNotPolynomial = "not polynomial in y, y'";

// rootof(...) generators shared across parses, keyed by base field and text.
std::mutex g_roots_mutex;
std::map<std::pair<const FieldLevel*, std::string>, std::pair<Field, Elem>> g_roots;

void add_to(Sparse& a, const Exp& e, const Elem& c) {
    auto it = a.find(e);
    if (it == a.end()) {
        if (!c.is_zero()) a.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
}

Sparse add(Sparse a, const Sparse& b) {
    for (const auto& [e, c] : b) add_to(a, e, c);
    return a;
}

Sparse neg(Sparse a) {
    for (auto& [e, c] : a) c = -c;
    return a;
}

Sparse mul(const Sparse& a, const Sparse& b) {
    Sparse r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) add_to(r, {ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
}

Sparse constant(const Elem& c) {
    Sparse r;
    if (!c.is_zero()) r.emplace(Exp{0, 0}, c);
    return r;
}

bool is_constant(const Sparse& a) { return a.empty() || (a.size() == 1 && a.begin()->first == Exp{0, 0}); }

Elem constant_value(const Sparse& a) { return a.empty() ? Elem() : a.begin()->second; }

class Parser {
public:
    Parser(const std::string& text, Mode mode) : text_(text), mode_(mode) {}

    Sparse parse() {
        Sparse e = expr();
        skip();
        if (peek() == '=') {
            ++pos_;
            e = add(e, neg(expr()));
        }
        skip();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return e;
    }

    std::optional<Rational> order;
    Field field;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(const std::string& s) {
        skip();
        if (text_.compare(pos_, s.size(), s) != 0) return false;
        pos_ += s.size();
        return true;
    }
    void expect(const std::string& s) {
        if (!accept(s)) fail("expected '" + s + "'", pos_);
    }

    Sparse expr() {
        Sparse acc = term();
        for (;;) {
            if (accept("+"))
                acc = add(acc, term());
            else if (accept("-"))
                acc = add(acc, neg(term()));
            else
                return acc;
        }
    }

    Sparse term() {
        Sparse acc = unary();
        for (;;) {
            skip();
            if (text_.compare(pos_, 2, "**") != 0 && accept("*")) {
                acc = mul(acc, unary());
            } else if (peek() == '/') {
                std::size_t at = pos_++;
                Sparse d = unary();
                acc = mul(acc, invert(d, at));
            } else {
                return acc;
            }
        }
    }

    Sparse invert(const Sparse& d, std::size_t at) {
        if (d.empty()) fail("division by zero", at);
        if (d.size() == 1) {
            const auto& [e, c] = *d.begin();
            if (e == Exp{0, 0}) return constant(c.inverse());
            if (mode_ == Mode::truncation) {
                Sparse r;
                r.emplace(Exp{-e.first, -e.second}, c.inverse());
                return r;
            }
        }
        fail(mode_ == Mode::equation ? kNotPolynomial : "division by a non-constant", at);
    }

    Sparse unary() {
        if (accept("-")) return neg(unary());
        if (accept("+")) return unary();
        return power();
    }

    Sparse power() {
        Sparse base = atom();
        skip();
        std::size_t at = pos_;
        if (!accept("**") && !accept("^")) return base;
        Sparse ex = unary();
        if (!is_constant(ex) || !constant_value(ex).is_rational()) fail("exponent must be a rational number", at);
        Rational e = constant_value(ex).rational();
        if (e.get_den() == 1 && e >= 0) {
            Sparse r = constant(Elem(1));
            for (long k = e.get_num().get_si(); k > 0; --k) r = mul(r, base);
            return r;
        }
        if (base.size() == 1) {
            const auto& [b, c] = *base.begin();
            if (!c.is_one() && e.get_den() != 1) fail("fractional power of a coefficient", at);
            Sparse r;
            r.emplace(Exp{b.first * e, b.second * e}, c.pow(e.get_num().get_si()));
            return r;
        }
        fail(mode_ == Mode::equation ? kNotPolynomial : "unsupported power", at);
    }

    std::string identifier() {
        skip();
        std::size_t s = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
        return text_.substr(s, pos_ - s);
    }

    Sparse variable(int which) {
        Sparse r;
        r.emplace(which == 0 ? Exp{1, 0} : Exp{0, 1}, Elem(1));
        return r;
    }

    Sparse derivative_of_y(std::size_t at) {
        if (mode_ != Mode::equation) fail("y' is only allowed in equations", at);
        if (text_.compare(pos_, 1, "'") == 0) fail("only first-order equations are supported", at);
        return variable(1);
    }

    Sparse atom() {
        skip();
        std::size_t at = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            Sparse e = expr();
            expect(")");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id = identifier();
            if (id == "y") {
                if (mode_ != Mode::equation) fail("unknown symbol 'y'", at);
                if (accept("(")) {
                    expect("x");
                    expect(")");
                }
                if (text_.compare(pos_, 1, "'") == 0) {
                    ++pos_;
                    return derivative_of_y(at);
                }
                return variable(0);
            }
            if (id == "D" && mode_ == Mode::equation) {
                expect("(");
                expect("y");
                if (accept("(")) {
                    expect("x");
                    expect(")");
                }
                expect(")");
                return variable(1);
            }
            if (id == "diff" && mode_ == Mode::equation) {
                expect("(");
                expect("y");
                expect("(");
                expect("x");
                expect(")");
                expect(",");
                expect("x");
                expect(")");
                return variable(1);
            }
            if ((id == "x" || id == "z") && mode_ == Mode::truncation) return variable(0);
            if ((id == "Z" || id == "_Z") && mode_ == Mode::rootof) return variable(0);
            if (id == "rootof" || id == "RootOf") return rootof(at);
            if (id == "O" && mode_ == Mode::truncation) {
                expect("(");
                Sparse e = expr();
                expect(")");
                if (e.size() != 1 || !e.begin()->second.is_one()) fail("O(...) needs a monomial x^e", at);
                Rational T = e.begin()->first.first;
                order = order ? std::min(*order, T) : T;
                return {};
            }
            if (id == "x" && mode_ == Mode::equation)
                fail("the equation must be autonomous (no x)", at);
            fail("unknown symbol '" + id + "'", at);
        }
        if (c == '\0') fail("unexpected end of input", at);
        fail("unexpected '" + std::string(1, c) + "'", at);
    }

    Sparse number() {
        std::size_t s = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        Integer whole(text_.substr(s, pos_ - s));
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            std::size_t f = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string frac = text_.substr(f, pos_ - f);
            if (frac.empty()) return constant(Elem(whole));
            Integer den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
            return constant(Elem(Rational(whole * den + Integer(frac), den)));
        }
        return constant(Elem(whole));
    }

    Sparse rootof(std::size_t at) {
        expect("(");
        Mode saved = mode_;
        mode_ = Mode::rootof;
        std::size_t s = pos_;
        Sparse e = expr();
        std::string body = text_.substr(s, pos_ - s);
        mode_ = saved;
        expect(")");
        dense::Poly m;
        Field base;
        for (const auto& [ex, c] : e) {
            if (ex.second != 0 || ex.first.get_den() != 1 || ex.first < 0) fail("rootof needs a polynomial in Z", at);
            std::size_t k = ex.first.get_num().get_ui();
            if (m.size() <= k) m.resize(k + 1);
            m[k] = c;
            base = base.join(field_of(c));
        }
        dense::strip(m);
        if (dense::degree(m) < 1) fail("rootof needs a non-constant polynomial", at);
        UniPoly mp("Z", m);
        std::lock_guard<std::mutex> lock(g_roots_mutex);
        // The generator over the coefficient field when it fits the tower built
        // so far, otherwise one adjoined on top of that tower.
        auto lookup = [&](const Field& over) {
            auto key = std::make_pair(over.top().get(), mp.monic().str());
            auto it = g_roots.find(key);
            if (it == g_roots.end()) {
                try {
                    it = g_roots.emplace(key, adjoin_checked(over, mp)).first;
                } catch (const ReducibleModulus&) {
                    fail("rootof polynomial " + body + " is reducible", at);
                }
            }
            return it;
        };
        auto it = lookup(base);
        try {
            field = field.join(it->second.first);
        } catch (const IncompatibleFields&) {
            it = lookup(field.join(base));
            field = it->second.first;
        }
        return constant(it->second.second);
    }

    std::string text_;
    std::size_t pos_ = 0;
    Mode mode_;
};

bool integral(const Rational& q) { return q.get_den() == 1 && q >= 0; }

}  // namespace

BiPoly parse_equation(const std::string& text) {
    Parser p(text, Mode::equation);
    Sparse s = p.parse();
    BiPoly F("y", "p");
    for (const auto& [e, c] : s) {
        if (!integral(e.first) || !integral(e.second)) p.fail(kNotPolynomial, 0);
        F.add_term(static_cast<int>(e.first.get_num().get_si()), static_cast<int>(e.second.get_num().get_si()), c);
    }
    return F;
}

Series parse_truncation(const std::string& text, Point point) {
    Parser p(text, Mode::truncation);
    Sparse s = p.parse();
    long n = 1;
    for (const auto& [e, c] : s) n = std::lcm(n, e.first.get_den().get_si());
    Series::Terms t;
    for (const auto& [e, c] : s) {
        Rational k = e.first * n;
        t.emplace(k.get_num().get_si(), c);
    }
    return Series(t, n, p.order, point);
}

Elem parse_constant(const std::string& text) {
    Parser p(text, Mode::constant);
    Sparse s = p.parse();
    if (!is_constant(s)) p.fail("expected a constant", 0);
    return constant_value(s);
}

std::string render_equation(const BiPoly& F) {
    NameFn name = [&name](const FieldLevel& L) -> std::string {
        if (L.kind == LevelKind::transcendental) return L.name;
        return "rootof(" + UniPoly("Z", L.minpoly).str(name) + ")";
    };
    return F.renamed("y", "y'").str(name);
}

}  // namespace aode
