#pragma once

#include <map>
#include <string>
#include <vector>

#include "curvelab/expvec.hpp"
#include "curvelab/extnat.hpp"
#include "curvelab/rational.hpp"

namespace curvelab {

// Sparse multivariate polynomial over the rationals. Terms never store a
// zero coefficient and the zero polynomial is the empty term map, so
// structural equality is semantic equality. Values are immutable in spirit:
// every operation returns a fresh polynomial.
class PolyQ {
public:
    using TermMap = std::map<ExpVec, Rat>;

    PolyQ() : nvars_(2) {}
    explicit PolyQ(int nvars);

    static PolyQ zero(int nvars) { return PolyQ(nvars); }
    static PolyQ constant(int nvars, const Rat& c);
    static PolyQ monomial(int nvars, const ExpVec& m, const Rat& c);
    static PolyQ variable(int nvars, int var);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Rat coeff(const ExpVec& m) const;

    // Minimum total degree over terms; infinity for the zero polynomial.
    ExtNat ord() const;
    // Maximum total degree; -1 for the zero polynomial.
    std::int64_t degree() const;

    bool operator==(const PolyQ& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const PolyQ& o) const { return !(*this == o); }

    PolyQ operator-() const;
    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ scaled(const Rat& c) const;
    PolyQ shifted(const ExpVec& m) const; // multiply by a monomial

    // Formal partial derivative.
    PolyQ partial(int var) const;

    // f(a x + b y, c x + d y) for an invertible 2x2 matrix; nvars must be 2.
    PolyQ substitute_linear(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const;

    // Value at the origin.
    Rat constant_term() const;

    // Terms of minimal total degree (the tangent cone form); zero input
    // yields zero.
    PolyQ lowest_form() const;

    // Canonical printing: descending global degrevlex, reduced fractions,
    // explicit '*' between factors. parse_poly(str()) reproduces the value.
    std::string str() const;

    void add_term(const ExpVec& m, const Rat& c); // used by builders; keeps normalization

private:
    int nvars_;
    TermMap terms_;
};

// Parses the ASCII polynomial grammar: variables x, y (and x1..x8 when
// nvars > 2), integer and p/q rational literals, operators + - * ^ with ^
// applied to non-negative integer literals, parentheses. Implicit
// multiplication is a syntax error. Throws parse_error with the offending
// position.
PolyQ parse_poly(const std::string& text, int nvars = 2);

// Exact ring operation dispatcher, mirroring the CLI surface.
enum class ArithOp { add, sub, mul };
PolyQ arith(const PolyQ& f, const PolyQ& g, ArithOp op);

// Content (gcd of coefficients, positive) of a nonzero polynomial.
Rat content(const PolyQ& f);

// Gcd of bivariate polynomials over Q, primitive and with positive leading
// coefficient in degrevlex. gcd(0, g) = normalized g.
PolyQ gcd_poly2(const PolyQ& f, const PolyQ& g);

// Square-freeness over Q[x,y]: gcd(f, f_x, f_y) is a constant.
bool is_square_free2(const PolyQ& f);

} // namespace curvelab
