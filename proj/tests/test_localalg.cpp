#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvelab/errors.hpp"
#include "curvelab/localalg.hpp"
#include "oracles.hpp"

using namespace curvelab;

namespace {

PolyQ P(const std::string& s) { return parse_poly(s, 2); }

std::vector<std::pair<int, int>> leading_pairs(const StandardBasis& sb) {
    std::vector<std::pair<int, int>> out;
    for (const auto& m : sb.leading_ideal) out.emplace_back(m.e[0], m.e[1]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("mora_normal_form: single reduction and self-reduction") {
    MonomialOrder local = MonomialOrder::local_negdegrevlex(2);
    // x^2 - 1*(x^2 - y^3) = y^3, reported monic.
    CHECK(mora_normal_form(P("x^2"), {P("x^2 - y^3")}, local) == P("y^3"));
    CHECK(mora_normal_form(P("x^2 - y^3"), {P("x^2 - y^3")}, local).is_zero());
    CHECK(mora_normal_form(P("3*x*y + y^4"), {P("3*x*y + y^4")}, local).is_zero());
    // No leading-term divisibility: y survives untouched.
    CHECK(mora_normal_form(P("y"), {P("x^2 - y^3")}, local) == P("y"));
    // Global orders are rejected.
    CHECK_THROWS_AS(mora_normal_form(P("y"), {P("x")}, MonomialOrder::global_degrevlex(2)),
                    std::invalid_argument);
}

TEST_CASE("standard_basis: leading ideals of the worked examples") {
    CHECK(leading_pairs(standard_basis(LocalIdeal::maximal())) ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});

    // Jacobian-style input for the cusp: <x^2 - y^3, 2x, -3y^2>.
    auto sb = standard_basis(LocalIdeal::in_plane({P("x^2 - y^3"), P("2*x"), P("-3*y^2")}));
    CHECK(leading_pairs(sb) == std::vector<std::pair<int, int>>{{0, 2}, {1, 0}});

    // A single generator is already a standard basis; the local order picks
    // x^2 (lower degree) as the lead.
    auto single = standard_basis(LocalIdeal::in_plane({P("x^2 - y^3")}));
    CHECK(leading_pairs(single) == std::vector<std::pair<int, int>>{{2, 0}});
}

TEST_CASE("colength: staircase counts") {
    CHECK(colength(LocalIdeal::in_plane({P("x^2"), P("x*y"), P("y^2")})) == 3);
    CHECK(colength(LocalIdeal::in_plane({P("x^2"), P("y^3")})) ==
          static_cast<std::uint64_t>(oracle::staircase_count({{2, 0}, {0, 3}})));
    CHECK(colength(LocalIdeal::in_plane({P("x^2 - y^3"), P("y")})) == 2);
    // Non-zero-dimensional quotients have infinite length.
    CHECK(colength(LocalIdeal::in_plane({P("x^2 - y^3")})) == ExtNat::infinity());
    CHECK(colength(LocalIdeal::in_plane({P("x - y")})) == ExtNat::infinity());
    // Unit ideal.
    CHECK(colength(LocalIdeal::in_plane({P("1 + x")})) == 0);
}

TEST_CASE("colength: hypersurface quotient ambient") {
    // <x, y> in O/(x^2 - y^3) is the maximal ideal; length of O_X/m = 1.
    CHECK(colength(LocalIdeal::maximal(P("x^2 - y^3"))) == 1);
    // <y> in O/(x^2 - y^3): colength <y, x^2 - y^3> = colength <y, x^2> = 2.
    CHECK(colength(LocalIdeal::in_curve(P("x^2 - y^3"), {P("y")})) == 2);
}

TEST_CASE("ideal_power") {
    LocalIdeal m = LocalIdeal::maximal();
    auto m2 = ideal_power(m, 2);
    REQUIRE(m2.generators.size() == 3);
    CHECK(colength(m2) == 3);

    auto same = ideal_power(m, 1);
    CHECK(same.generators.size() == 2);

    auto mixed = ideal_power(LocalIdeal::in_plane({P("x"), P("y^2")}), 2);
    REQUIRE(mixed.generators.size() == 3); // x^2, x*y^2, y^4
    CHECK(colength(mixed) == static_cast<std::uint64_t>(oracle::staircase_count({{2, 0}, {1, 2}, {0, 4}})));

    CHECK_THROWS_AS(ideal_power(m, 0), std::invalid_argument);
}

TEST_CASE("milnor numbers") {
    CHECK(milnor(P("x^2 - y^3")) == 2);
    CHECK(milnor(P("x*y")) == 1);
    CHECK(milnor(P("x^2 - y^4")) == 3);
    CHECK(milnor(P("y")) == 0);                       // smooth germ
    CHECK(milnor(P("x^2")) == ExtNat::infinity());     // non-isolated
    CHECK_THROWS_AS(milnor(P("1 + x")), std::invalid_argument);
}

TEST_CASE("milnor agrees with the resultant oracle i(f_x, f_y)") {
    for (const char* s : {"x^2 - y^3", "x*y", "x^2 - y^4", "x^3 - y^5", "x^2 - y^5",
                          "y^2 - 2*x^2", "x^3 - y^4"}) {
        PolyQ f = P(s);
        CAPTURE(s);
        CHECK(milnor(f) == oracle::intersection_oracle(f.partial(0), f.partial(1)));
    }
}

TEST_CASE("tjurina numbers") {
    CHECK(tjurina(P("x^2 - y^3")) == 2);
    CHECK(tjurina(P("x*y")) == 1);
    CHECK(tjurina(P("x^3 - y^5")) == 8);
    // Quasi-homogeneous germs have tau = mu.
    CHECK(tjurina(P("x^3 - y^4")) == milnor(P("x^3 - y^4")));
}

TEST_CASE("property: membership soundness") {
    // Random monomial combinations of the generators must reduce to zero
    // against the standard basis.
    std::mt19937_64 rng(20260805);
    std::uniform_int_distribution<int> exp(0, 3);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::vector<std::vector<PolyQ>> gen_sets = {
        {P("x^2 - y^3"), P("x*y^2")},
        {P("x^2"), P("x*y"), P("y^2")},
        {P("x^3 - y^4"), P("2*x + y^2")},
        {P("x^2 - y^3")},
    };
    MonomialOrder local = MonomialOrder::local_negdegrevlex(2);
    for (const auto& gens : gen_sets) {
        auto sb = standard_basis(LocalIdeal::in_plane(gens));
        for (int trial = 0; trial < 20; ++trial) {
            PolyQ h(2);
            for (const auto& g : gens) {
                PolyQ mono = PolyQ::monomial(2, ExpVec::of({exp(rng), exp(rng)}), coef(rng));
                h = h + mono * g;
            }
            CHECK(mora_normal_form(h, sb.elements, local).is_zero());
        }
    }
}

TEST_CASE("property: colength of m^k is k(k+1)/2 for k <= 12") {
    LocalIdeal m = LocalIdeal::maximal();
    for (int k = 1; k <= 12; ++k) {
        auto got = colength(ideal_power(m, k));
        CHECK(got == static_cast<std::uint64_t>(k * (k + 1) / 2));
    }
}

TEST_CASE("property: finiteness iff pure powers in the leading ideal") {
    // Finite cases carry pure powers of both variables.
    for (const char* s : {"x^2 - y^3", "x^3 - y^4"}) {
        PolyQ f = P(s);
        auto sb = standard_basis(LocalIdeal::in_plane({f.partial(0), f.partial(1)}));
        bool px = false, py = false;
        for (const auto& m : sb.leading_ideal) {
            if (m.e[1] == 0) px = true;
            if (m.e[0] == 0) py = true;
        }
        CHECK(px);
        CHECK(py);
        CHECK(colength(sb).is_finite());
    }
    // Infinite case misses one of them.
    auto sb = standard_basis(LocalIdeal::in_plane({P("x^2 - y^3")}));
    bool px = false, py = false;
    for (const auto& m : sb.leading_ideal) {
        if (m.e[1] == 0) px = true;
        if (m.e[0] == 0) py = true;
    }
    CHECK(px);
    CHECK_FALSE(py);
    CHECK_FALSE(colength(sb).is_finite());
}

TEST_CASE("property: mu >= (ord-1)^2 for isolated singularities") {
    std::mt19937_64 rng(20260806);
    std::uniform_int_distribution<int> coef(-4, 4);
    int checked = 0;
    while (checked < 25) {
        // Random germ of order >= 1 built from a handful of monomials.
        PolyQ f(2);
        std::uniform_int_distribution<int> exp(0, 4);
        for (int t = 0; t < 5; ++t) {
            int a = exp(rng), b = exp(rng);
            if (a + b == 0) continue;
            f.add_term(ExpVec::of({a, b}), coef(rng));
        }
        if (f.is_zero() || f.ord() == ExtNat::infinity() || f.ord().value() < 1) continue;
        auto mu = milnor(f);
        if (!mu.is_finite()) continue; // not isolated; outside the property
        auto m = f.ord().value();
        CHECK(mu.value() >= (m - 1) * (m - 1));
        ++checked;
    }
}

TEST_CASE("step cap raises instead of returning wrong answers") {
    MoraOptions opts;
    opts.step_cap = 2;
    CHECK_THROWS_AS(standard_basis(LocalIdeal::in_plane({P("x^2 - y^3"), P("x*y^4 + y^5"),
                                                         P("y^7 - x^3*y")}),
                                   opts),
                    step_limit_error);
}
