#include "curvelab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "curvelab/errors.hpp"

namespace curvelab {

PolyQ::PolyQ(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > kMaxVars)
        throw std::invalid_argument("PolyQ: nvars must be between 1 and " + std::to_string(kMaxVars));
}

PolyQ PolyQ::constant(int nvars, const Rat& c) {
    PolyQ f(nvars);
    f.add_term(ExpVec{}, c);
    return f;
}

PolyQ PolyQ::monomial(int nvars, const ExpVec& m, const Rat& c) {
    PolyQ f(nvars);
    f.add_term(m, c);
    return f;
}

PolyQ PolyQ::variable(int nvars, int var) {
    if (var < 0 || var >= nvars) throw std::invalid_argument("PolyQ: variable index out of range");
    return monomial(nvars, ExpVec::unit(var), 1);
}

void PolyQ::add_term(const ExpVec& m, const Rat& c) {
    if (c == 0) return;
    for (int i = nvars_; i < kMaxVars; ++i)
        if (m.e[static_cast<std::size_t>(i)] != 0)
            throw std::invalid_argument("PolyQ: exponent set beyond nvars");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat PolyQ::coeff(const ExpVec& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

ExtNat PolyQ::ord() const {
    if (terms_.empty()) return ExtNat::infinity();
    std::int64_t best = -1;
    for (const auto& [m, c] : terms_) {
        auto d = m.total_degree();
        if (best < 0 || d < best) best = d;
    }
    return ExtNat::of(static_cast<std::uint64_t>(best));
}

std::int64_t PolyQ::degree() const {
    std::int64_t best = -1;
    for (const auto& [m, c] : terms_) best = std::max(best, m.total_degree());
    return best;
}

PolyQ PolyQ::operator-() const {
    PolyQ r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

namespace {

void require_same_nvars(const PolyQ& f, const PolyQ& g) {
    if (f.nvars() != g.nvars())
        throw std::invalid_argument("PolyQ: operands have different nvars (" +
                                    std::to_string(f.nvars()) + " vs " + std::to_string(g.nvars()) + ")");
}

} // namespace

PolyQ PolyQ::operator+(const PolyQ& o) const {
    require_same_nvars(*this, o);
    PolyQ r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

PolyQ PolyQ::operator-(const PolyQ& o) const {
    require_same_nvars(*this, o);
    PolyQ r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    require_same_nvars(*this, o);
    PolyQ r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma + mb, ca * cb);
    return r;
}

PolyQ PolyQ::scaled(const Rat& c) const {
    PolyQ r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

PolyQ PolyQ::shifted(const ExpVec& m) const {
    PolyQ r(nvars_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t + m, c);
    return r;
}

PolyQ PolyQ::partial(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("PolyQ: variable index out of range");
    PolyQ r(nvars_);
    for (const auto& [m, c] : terms_) {
        auto ev = m.e[static_cast<std::size_t>(var)];
        if (ev == 0) continue;
        ExpVec d = m;
        d.e[static_cast<std::size_t>(var)] = ev - 1;
        r.add_term(d, c * ev);
    }
    return r;
}

PolyQ PolyQ::substitute_linear(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const {
    if (nvars_ != 2) throw std::invalid_argument("substitute_linear: requires nvars = 2");
    Rat det = a * d - b * c;
    if (det == 0) throw std::invalid_argument("substitute_linear: matrix is singular");

    PolyQ gx = PolyQ::variable(2, 0).scaled(a) + PolyQ::variable(2, 1).scaled(b);
    PolyQ gy = PolyQ::variable(2, 0).scaled(c) + PolyQ::variable(2, 1).scaled(d);

    std::int64_t ex_max = 0, ey_max = 0;
    for (const auto& [m, k] : terms_) {
        ex_max = std::max<std::int64_t>(ex_max, m.e[0]);
        ey_max = std::max<std::int64_t>(ey_max, m.e[1]);
    }
    std::vector<PolyQ> px(static_cast<std::size_t>(ex_max) + 1, PolyQ::constant(2, 1));
    std::vector<PolyQ> py(static_cast<std::size_t>(ey_max) + 1, PolyQ::constant(2, 1));
    for (std::size_t i = 1; i < px.size(); ++i) px[i] = px[i - 1] * gx;
    for (std::size_t i = 1; i < py.size(); ++i) py[i] = py[i - 1] * gy;

    PolyQ r(2);
    for (const auto& [m, k] : terms_)
        r = r + (px[static_cast<std::size_t>(m.e[0])] * py[static_cast<std::size_t>(m.e[1])]).scaled(k);
    return r;
}

Rat PolyQ::constant_term() const { return coeff(ExpVec{}); }

PolyQ PolyQ::lowest_form() const {
    PolyQ r(nvars_);
    if (terms_.empty()) return r;
    std::int64_t o = static_cast<std::int64_t>(ord().value());
    for (const auto& [m, c] : terms_)
        if (m.total_degree() == o) r.terms_.emplace(m, c);
    return r;
}

namespace {

std::string var_name(int nvars, int i) {
    if (nvars <= 2) return i == 0 ? "x" : "y";
    return "x" + std::to_string(i + 1);
}

std::string monomial_str(int nvars, const ExpVec& m) {
    std::string out;
    for (int i = 0; i < nvars; ++i) {
        auto e = m.e[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += var_name(nvars, i);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace

std::string PolyQ::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const ExpVec, Rat>*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    MonomialOrder order = MonomialOrder::global_degrevlex(nvars_);
    std::sort(sorted.begin(), sorted.end(),
              [&](const auto* a, const auto* b) { return order.greater(a->first, b->first); });

    std::string out;
    bool first = true;
    for (const auto* t : sorted) {
        const Rat& c = t->second;
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = monomial_str(nvars_, t->first);
        if (mono.empty()) {
            out += rat_str(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += rat_str(mag) + "*" + mono;
        }
    }
    return out;
}

PolyQ arith(const PolyQ& f, const PolyQ& g, ArithOp op) {
    switch (op) {
        case ArithOp::add: return f + g;
        case ArithOp::sub: return f - g;
        case ArithOp::mul: return f * g;
    }
    throw std::invalid_argument("arith: unknown op");
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum class Kind { integer, name, plus, minus, star, caret, slash, lparen, rparen, end };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::Kind::end, "", start};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::Kind::integer, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = {Token::Kind::name, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Token::Kind::plus, "+", start}; return;
            case '-': tok_ = {Token::Kind::minus, "-", start}; return;
            case '*': tok_ = {Token::Kind::star, "*", start}; return;
            case '^': tok_ = {Token::Kind::caret, "^", start}; return;
            case '/': tok_ = {Token::Kind::slash, "/", start}; return;
            case '(': tok_ = {Token::Kind::lparen, "(", start}; return;
            case ')': tok_ = {Token::Kind::rparen, ")", start}; return;
            default: throw parse_error(std::string("unexpected character '") + c + "'", start);
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_{Token::Kind::end, "", 0};
};

class Parser {
public:
    Parser(const std::string& text, int nvars) : lex_(text), nvars_(nvars) {}

    PolyQ parse() {
        PolyQ f = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::end)
            throw parse_error("expected operator or end of input, found '" + t.text + "'", t.pos);
        return f;
    }

private:
    PolyQ expr() {
        PolyQ acc = term();
        for (;;) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Kind::plus) {
                lex_.take();
                acc = acc + term();
            } else if (t.kind == Token::Kind::minus) {
                lex_.take();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    PolyQ term() {
        PolyQ acc = factor();
        while (lex_.peek().kind == Token::Kind::star) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    PolyQ factor() {
        if (lex_.peek().kind == Token::Kind::minus) {
            lex_.take();
            return -factor();
        }
        PolyQ base = primary();
        if (lex_.peek().kind == Token::Kind::caret) {
            Token caret = lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Kind::integer)
                throw parse_error("exponent must be a non-negative integer literal", e.pos);
            long exp = 0;
            try {
                exp = std::stol(e.text);
            } catch (const std::exception&) {
                throw parse_error("exponent out of range", e.pos);
            }
            if (exp > 4096) throw parse_error("exponent exceeds supported bound 4096", e.pos);
            (void)caret;
            return power(base, exp);
        }
        return base;
    }

    PolyQ primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::lparen: {
                PolyQ inner = expr();
                Token close = lex_.take();
                if (close.kind != Token::Kind::rparen)
                    throw parse_error("expected ')'", close.pos);
                return inner;
            }
            case Token::Kind::integer: {
                Int num(t.text);
                if (lex_.peek().kind == Token::Kind::slash) {
                    lex_.take();
                    Token d = lex_.take();
                    if (d.kind != Token::Kind::integer)
                        throw parse_error("expected integer denominator after '/'", d.pos);
                    Int den(d.text);
                    if (den == 0) throw parse_error("zero denominator", d.pos);
                    Rat r(num, den);
                    r.canonicalize();
                    return PolyQ::constant(nvars_, r);
                }
                return PolyQ::constant(nvars_, Rat(num));
            }
            case Token::Kind::name: return variable_ref(t);
            default: throw parse_error("expected polynomial term, found '" + t.text + "'", t.pos);
        }
    }

    PolyQ variable_ref(const Token& t) {
        const std::string& n = t.text;
        if (n == "x") return PolyQ::variable(nvars_, 0);
        if (n == "y") {
            if (nvars_ < 2) throw parse_error("unknown variable 'y' (nvars = 1)", t.pos);
            return PolyQ::variable(nvars_, 1);
        }
        if (nvars_ > 2 && n.size() >= 2 && n[0] == 'x') {
            bool digits = true;
            for (std::size_t i = 1; i < n.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(n[i]))) digits = false;
            if (digits) {
                int idx = std::stoi(n.substr(1));
                if (idx >= 1 && idx <= nvars_) return PolyQ::variable(nvars_, idx - 1);
                throw parse_error("variable '" + n + "' out of range (nvars = " +
                                      std::to_string(nvars_) + ")",
                                  t.pos);
            }
        }
        throw parse_error("unknown variable '" + n + "'", t.pos);
    }

    static PolyQ power(PolyQ base, long e) {
        PolyQ acc = PolyQ::constant(base.nvars(), 1);
        while (e > 0) {
            if (e & 1L) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    Lexer lex_;
    int nvars_;
};

} // namespace

PolyQ parse_poly(const std::string& text, int nvars) {
    if (nvars < 1 || nvars > kMaxVars)
        throw std::invalid_argument("parse_poly: nvars must be between 1 and " + std::to_string(kMaxVars));
    Parser p(text, nvars);
    return p.parse();
}

// ---------------------------------------------------------------------------
// Bivariate gcd (treating f in Q[x][y]) and square-freeness
// ---------------------------------------------------------------------------

namespace {

using UX = std::vector<Rat>; // dense univariate in x, index = degree
using YX = std::vector<UX>;  // index = degree in y

int ux_deg(const UX& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

void ux_trim(UX& a) { a.resize(static_cast<std::size_t>(ux_deg(a) + 1)); }

UX ux_mul(const UX& a, const UX& b) {
    if (ux_deg(a) < 0 || ux_deg(b) < 0) return {};
    UX r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ux_trim(r);
    return r;
}

UX ux_sub(const UX& a, const UX& b) {
    UX r = a;
    if (r.size() < b.size()) r.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ux_trim(r);
    return r;
}

// Remainder of a by b over Q(x) -- exact field division on coefficients.
UX ux_rem(UX a, const UX& b) {
    int db = ux_deg(b);
    if (db < 0) throw std::logic_error("ux_rem: division by zero");
    ux_trim(a);
    while (ux_deg(a) >= db) {
        int da = ux_deg(a);
        Rat q = a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= q * b[static_cast<std::size_t>(i)];
        ux_trim(a);
        if (ux_deg(a) < 0) break;
    }
    return a;
}

UX ux_monic(UX a) {
    int d = ux_deg(a);
    if (d < 0) return a;
    Rat lc = a[static_cast<std::size_t>(d)];
    for (auto& c : a) c /= lc;
    return a;
}

UX ux_gcd(UX a, UX b) {
    ux_trim(a);
    ux_trim(b);
    while (ux_deg(b) >= 0) {
        UX r = ux_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return ux_monic(a);
}

// Exact division a / b, throwing on non-exactness (internal use only).
UX ux_divexact(UX a, const UX& b) {
    int db = ux_deg(b);
    if (db < 0) throw std::logic_error("ux_divexact: division by zero");
    ux_trim(a);
    int da = ux_deg(a);
    if (da < 0) return {};
    UX q(static_cast<std::size_t>(da - db + 1), Rat(0));
    while (ux_deg(a) >= db) {
        int d = ux_deg(a);
        Rat c = a[static_cast<std::size_t>(d)] / b[static_cast<std::size_t>(db)];
        q[static_cast<std::size_t>(d - db)] = c;
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(d - db + i)] -= c * b[static_cast<std::size_t>(i)];
        ux_trim(a);
        if (ux_deg(a) < 0) break;
    }
    if (ux_deg(a) >= 0) throw std::logic_error("ux_divexact: division not exact");
    return q;
}

YX to_yx(const PolyQ& f) {
    std::int64_t dy = 0, dx = 0;
    for (const auto& [m, c] : f.terms()) {
        dx = std::max<std::int64_t>(dx, m.e[0]);
        dy = std::max<std::int64_t>(dy, m.e[1]);
    }
    YX r(static_cast<std::size_t>(dy) + 1, UX(static_cast<std::size_t>(dx) + 1, Rat(0)));
    for (const auto& [m, c] : f.terms())
        r[static_cast<std::size_t>(m.e[1])][static_cast<std::size_t>(m.e[0])] = c;
    for (auto& row : r) ux_trim(row);
    return r;
}

int yx_deg(const YX& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (ux_deg(a[static_cast<std::size_t>(i)]) >= 0) return i;
    return -1;
}

void yx_trim(YX& a) { a.resize(static_cast<std::size_t>(yx_deg(a) + 1)); }

UX yx_content(const YX& a) {
    UX g;
    for (const auto& row : a)
        if (ux_deg(row) >= 0) g = g.empty() ? ux_monic(row) : ux_gcd(g, row);
    return g;
}

YX yx_divexact_ux(const YX& a, const UX& d) {
    YX r = a;
    for (auto& row : r)
        if (ux_deg(row) >= 0) row = ux_divexact(row, d);
    return r;
}

YX yx_scale_ux(const YX& a, const UX& s) {
    YX r = a;
    for (auto& row : r) row = ux_mul(row, s);
    return r;
}

// Pseudo-remainder of a by b with respect to y.
YX yx_prem(YX a, const YX& b) {
    yx_trim(a);
    int db = yx_deg(b);
    if (db < 0) throw std::logic_error("yx_prem: division by zero");
    const UX& lcb = b[static_cast<std::size_t>(db)];
    while (yx_deg(a) >= db) {
        int da = yx_deg(a);
        UX lca = a[static_cast<std::size_t>(da)];
        YX scaled = yx_scale_ux(a, lcb);
        YX sub(static_cast<std::size_t>(da) + 1);
        for (int i = 0; i <= db; ++i)
            sub[static_cast<std::size_t>(da - db + i)] = ux_mul(lca, b[static_cast<std::size_t>(i)]);
        YX next(std::max(scaled.size(), sub.size()));
        for (std::size_t i = 0; i < next.size(); ++i) {
            UX lhs = i < scaled.size() ? scaled[i] : UX{};
            UX rhs = i < sub.size() ? sub[i] : UX{};
            next[i] = ux_sub(lhs, rhs);
        }
        yx_trim(next);
        if (static_cast<int>(next.size()) - 1 >= da && yx_deg(next) >= da)
            throw std::logic_error("yx_prem: degree did not drop");
        a = std::move(next);
    }
    return a;
}

PolyQ yx_to_poly(const YX& a) {
    PolyQ f(2);
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t i = 0; i < a[j].size(); ++i)
            if (a[j][i] != 0)
                f.add_term(ExpVec::of({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)}),
                           a[j][i]);
    return f;
}

PolyQ normalize_assoc(const PolyQ& f) {
    if (f.is_zero()) return f;
    Rat c = content(f);
    MonomialOrder order = MonomialOrder::global_degrevlex(f.nvars());
    const ExpVec* lead = nullptr;
    for (const auto& [m, k] : f.terms())
        if (!lead || order.greater(m, *lead)) lead = &m;
    if (f.coeff(*lead) < 0) c = -c;
    return f.scaled(1 / c);
}

} // namespace

Rat content(const PolyQ& f) {
    if (f.is_zero()) throw std::invalid_argument("content: zero polynomial");
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : f.terms()) {
        Int num = c.get_num();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
        Int den = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    if (c < 0) c = -c;
    return c;
}

PolyQ gcd_poly2(const PolyQ& f, const PolyQ& g) {
    if (f.nvars() != 2 || g.nvars() != 2)
        throw std::invalid_argument("gcd_poly2: requires nvars = 2");
    if (f.is_zero()) return g.is_zero() ? g : normalize_assoc(g);
    if (g.is_zero()) return normalize_assoc(f);

    YX A = to_yx(f), B = to_yx(g);
    UX ca = yx_content(A), cb = yx_content(B);
    UX cd = ux_gcd(ca, cb);
    YX ap = yx_divexact_ux(A, ca), bp = yx_divexact_ux(B, cb);

    // Primitive PRS in y; content stripped every step to tame growth.
    while (yx_deg(bp) > 0) {
        YX r = yx_prem(ap, bp);
        yx_trim(r);
        if (yx_deg(r) >= 0) {
            UX cr = yx_content(r);
            r = yx_divexact_ux(r, cr);
        }
        ap = std::move(bp);
        bp = std::move(r);
    }

    YX result;
    if (yx_deg(bp) == 0) {
        // Nonzero remainder of y-degree 0: the primitive parts are coprime.
        result = YX{UX{Rat(1)}};
    } else {
        result = ap;
    }
    result = yx_scale_ux(result, cd);
    return normalize_assoc(yx_to_poly(result));
}

bool is_square_free2(const PolyQ& f) {
    if (f.nvars() != 2) throw std::invalid_argument("is_square_free2: requires nvars = 2");
    if (f.is_zero()) return false;
    PolyQ g = gcd_poly2(f, f.partial(0));
    g = gcd_poly2(g, f.partial(1));
    return g.degree() == 0;
}

} // namespace curvelab
