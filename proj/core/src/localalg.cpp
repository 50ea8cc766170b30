#include "curvelab/localalg.hpp"

#include <algorithm>
#include <deque>

#include "curvelab/errors.hpp"

namespace curvelab {

namespace {

// Working representation: terms sorted with the leading term first. Both
// supported orders are semigroup orders, so multiplying by a monomial
// preserves the sorting. Stored polynomials are kept as primitive integer
// vectors (content one); reductions cross-multiply by leading coefficients
// instead of dividing, which keeps all arithmetic over Z.
struct Term {
    ExpVec m;
    Rat c;
};

struct SP {
    std::vector<Term> t;

    bool zero() const { return t.empty(); }
    const ExpVec& lm() const { return t.front().m; }
    const Rat& lc() const { return t.front().c; }

    std::int64_t max_degree() const {
        std::int64_t d = -1;
        for (const auto& term : t) d = std::max(d, term.m.total_degree());
        return d;
    }
    std::int64_t ecart() const { return max_degree() - lm().total_degree(); }

    std::size_t coeff_bits() const {
        std::size_t bits = 0;
        for (const auto& term : t)
            bits = std::max(bits, mpz_sizeinbase(term.c.get_num().get_mpz_t(), 2));
        return bits;
    }
};

// trunc < 0 disables truncation. With trunc = D >= 0, terms of total degree
// >= D are discarded: they lie in m^D, so dropping them computes modulo
// I + m^D, which is how the certified bounded-degree strategy below works.
void truncate(SP& s, std::int64_t trunc) {
    if (trunc < 0) return;
    std::erase_if(s.t, [&](const Term& term) { return term.m.total_degree() >= trunc; });
}

SP from_poly(const PolyQ& f, const MonomialOrder& order, std::int64_t trunc) {
    SP s;
    s.t.reserve(f.term_count());
    for (const auto& [m, c] : f.terms()) s.t.push_back({m, c});
    std::sort(s.t.begin(), s.t.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.m, b.m); });
    truncate(s, trunc);
    return s;
}

PolyQ to_poly(const SP& s) {
    PolyQ f(2);
    for (const auto& term : s.t) f.add_term(term.m, term.c);
    return f;
}

SP make_monic(SP s) {
    if (s.zero()) return s;
    Rat lc = s.lc();
    if (lc != 1)
        for (auto& term : s.t) term.c /= lc;
    return s;
}

// Scale by a unit so the coefficients are coprime integers.
SP normalize_content(SP s) {
    if (s.zero()) return s;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& term : s.t) {
        Int num = term.c.get_num();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
        Int den = term.c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    for (auto& term : s.t) term.c /= c;
    return s;
}

// r = ca * a - cb * x^shift * b, merging the sorted term lists.
SP sub_scaled_shifted(const SP& a, const Rat& ca, const SP& b, const ExpVec& shift, const Rat& cb,
                      const MonomialOrder& order) {
    SP r;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j >= b.t.size()) {
            Rat c = ca * a.t[i].c;
            if (c != 0) r.t.push_back({a.t[i].m, c});
            ++i;
            continue;
        }
        ExpVec bm = b.t[j].m + shift;
        if (i >= a.t.size()) {
            Rat c = -cb * b.t[j].c;
            if (c != 0) r.t.push_back({bm, c});
            ++j;
            continue;
        }
        int cmp = order.cmp(a.t[i].m, bm);
        if (cmp > 0) {
            Rat c = ca * a.t[i].c;
            if (c != 0) r.t.push_back({a.t[i].m, c});
            ++i;
        } else if (cmp < 0) {
            Rat c = -cb * b.t[j].c;
            if (c != 0) r.t.push_back({bm, c});
            ++j;
        } else {
            Rat c = ca * a.t[i].c - cb * b.t[j].c;
            if (c != 0) r.t.push_back({a.t[i].m, c});
            ++i;
            ++j;
        }
    }
    return r;
}

struct StepBudget {
    long remaining;
    void spend(long units, const char* what) {
        remaining -= units;
        if (remaining < 0)
            throw step_limit_error(std::string("step cap exceeded during ") + what +
                                   "; raise the cap to continue");
    }
};

// Mora weak normal form with ecart selection (tangent cone algorithm).
// Remainders encountered with smaller ecart than every applicable reducer
// join the reducer set; this is what guarantees termination for local
// orders.
SP mora_nf(SP h, const std::vector<SP>& basis, const MonomialOrder& order, StepBudget& budget,
           std::int64_t trunc) {
    struct Reducer {
        const SP* p;
        std::int64_t ecart;
    };
    std::vector<Reducer> reducers;
    std::deque<SP> extra; // stable addresses for intermediate reducers
    reducers.reserve(basis.size());
    for (const auto& g : basis)
        if (!g.zero()) reducers.push_back({&g, g.ecart()});

    h = normalize_content(std::move(h));
    while (!h.zero()) {
        std::int64_t h_ecart = h.ecart();
        // The oldest reducer that cannot force an insertion (ecart at most
        // that of h) wins outright: original generators come first and carry
        // the smallest coefficients. Only when every divisor has larger
        // ecart is the minimal one taken and h inserted.
        const SP* best = nullptr;
        std::int64_t best_ecart = 0;
        for (const auto& g : reducers) {
            if (!g.p->lm().divides(h.lm())) continue;
            if (!best || g.ecart < best_ecart) {
                best = g.p;
                best_ecart = g.ecart;
            }
            if (best_ecart <= h_ecart) break;
        }
        if (!best) break;
        if (best_ecart > h_ecart) {
            extra.push_back(h);
            reducers.push_back({&extra.back(), h_ecart});
        }
        // Large coefficients drain the budget faster, so runaway growth
        // surfaces as a step_limit_error instead of an unresponsive process.
        budget.spend(1 + static_cast<long>(h.coeff_bits() / 512), "Mora reduction");
        Int g = gcd(h.lc().get_num(), best->lc().get_num());
        Rat mult_h(best->lc().get_num() / g), mult_t(h.lc().get_num() / g);
        h = sub_scaled_shifted(h, mult_h, *best, h.lm() - best->lm(), mult_t, order);
        truncate(h, trunc);
        h = normalize_content(std::move(h));
    }
    return h; // primitive integer; callers normalize for output
}

SP spair(const SP& f, const SP& g, const MonomialOrder& order, std::int64_t trunc) {
    ExpVec lcm;
    for (int i = 0; i < kMaxVars; ++i)
        lcm.e[static_cast<std::size_t>(i)] =
            std::max(f.lm().e[static_cast<std::size_t>(i)], g.lm().e[static_cast<std::size_t>(i)]);
    SP shifted_f;
    shifted_f.t.reserve(f.t.size());
    ExpVec sf = lcm - f.lm();
    for (const auto& term : f.t) shifted_f.t.push_back({term.m + sf, term.c});
    SP s = sub_scaled_shifted(shifted_f, g.lc(), g, lcm - g.lm(), f.lc(), order);
    truncate(s, trunc);
    return normalize_content(std::move(s));
}

// S-pair completion; returns a minimal basis of primitive integer vectors.
std::vector<SP> complete_basis(std::vector<SP> basis, const MonomialOrder& order,
                               StepBudget& budget, std::int64_t trunc) {
    std::erase_if(basis, [](const SP& s) { return s.zero(); });
    std::sort(basis.begin(), basis.end(),
              [&](const SP& a, const SP& b) { return order.greater(a.lm(), b.lm()); });

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        budget.spend(1, "standard basis completion");
        SP s = spair(basis[i], basis[j], order, trunc);
        if (s.zero()) continue;
        SP r = mora_nf(std::move(s), basis, order, budget, trunc);
        if (r.zero()) continue;
        std::size_t k = basis.size();
        basis.push_back(std::move(r));
        for (std::size_t a = 0; a < k; ++a) pairs.emplace_back(a, k);
    }

    std::vector<SP> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (basis[j].lm() != basis[i].lm() && basis[j].lm().divides(basis[i].lm())) {
                redundant = true;
                break;
            }
            if (basis[j].lm() == basis[i].lm() && j < i) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const SP& a, const SP& b) { return order.greater(a.lm(), b.lm()); });
    return minimal;
}

void validate_germ_poly(const PolyQ& f, const char* what) {
    if (f.nvars() != 2)
        throw std::invalid_argument(std::string(what) + ": requires nvars = 2");
}

std::vector<ExpVec> minimal_monomials(std::vector<ExpVec> lms) {
    std::sort(lms.begin(), lms.end());
    lms.erase(std::unique(lms.begin(), lms.end()), lms.end());
    std::vector<ExpVec> minimal;
    for (const auto& m : lms) {
        bool redundant = false;
        for (const auto& g : lms)
            if (g != m && g.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(m);
    }
    return minimal;
}

struct Staircase {
    bool finite = false;
    std::uint64_t count = 0;
    std::int64_t max_standard_degree = -1; // -1: no standard monomials
};

Staircase staircase_of(const std::vector<ExpVec>& leading) {
    std::int64_t pure_x = -1, pure_y = -1;
    for (const auto& m : leading) {
        if (m.e[1] == 0) pure_x = pure_x < 0 ? m.e[0] : std::min<std::int64_t>(pure_x, m.e[0]);
        if (m.e[0] == 0) pure_y = pure_y < 0 ? m.e[1] : std::min<std::int64_t>(pure_y, m.e[1]);
    }
    Staircase st;
    if (pure_x == 0 || pure_y == 0) { // unit ideal
        st.finite = true;
        return st;
    }
    if (pure_x < 0 || pure_y < 0) return st;
    st.finite = true;
    for (std::int64_t i = 0; i < pure_x; ++i) {
        std::int64_t h = pure_y;
        for (const auto& m : leading)
            if (m.e[0] <= i) h = std::min<std::int64_t>(h, m.e[1]);
        st.count += static_cast<std::uint64_t>(h);
        if (h > 0) st.max_standard_degree = std::max(st.max_standard_degree, i + h - 1);
    }
    return st;
}

std::vector<ExpVec> leading_monomials(const std::vector<SP>& basis) {
    std::vector<ExpVec> lms;
    for (const auto& s : basis) lms.push_back(s.lm());
    return minimal_monomials(std::move(lms));
}

} // namespace

LocalIdeal LocalIdeal::in_plane(std::vector<PolyQ> gens) {
    LocalIdeal ideal;
    for (auto& g : gens) {
        validate_germ_poly(g, "LocalIdeal");
        if (!g.is_zero()) ideal.generators.push_back(std::move(g));
    }
    return ideal;
}

LocalIdeal LocalIdeal::in_curve(PolyQ divisor, std::vector<PolyQ> gens) {
    validate_germ_poly(divisor, "LocalIdeal");
    if (divisor.is_zero() || divisor.ord() < ExtNat::of(1))
        throw std::invalid_argument("LocalIdeal: quotient divisor must be nonzero with ord >= 1");
    LocalIdeal ideal = in_plane(std::move(gens));
    ideal.quotient_divisor = std::move(divisor);
    return ideal;
}

LocalIdeal LocalIdeal::maximal(std::optional<PolyQ> divisor) {
    std::vector<PolyQ> gens{PolyQ::variable(2, 0), PolyQ::variable(2, 1)};
    if (divisor) return in_curve(std::move(*divisor), std::move(gens));
    return in_plane(std::move(gens));
}

std::vector<PolyQ> LocalIdeal::working_generators() const {
    std::vector<PolyQ> gens = generators;
    if (quotient_divisor) gens.push_back(*quotient_divisor);
    return gens;
}

PolyQ mora_normal_form(const PolyQ& f, const std::vector<PolyQ>& basis,
                       const MonomialOrder& order, const MoraOptions& opts) {
    if (!order.is_local())
        throw std::invalid_argument("mora_normal_form: order must be of local kind");
    validate_germ_poly(f, "mora_normal_form");
    std::vector<SP> sp_basis;
    for (const auto& g : basis) {
        validate_germ_poly(g, "mora_normal_form");
        if (!g.is_zero()) sp_basis.push_back(normalize_content(from_poly(g, order, -1)));
    }
    StepBudget budget{opts.step_cap};
    return to_poly(make_monic(mora_nf(from_poly(f, order, -1), sp_basis, order, budget, -1)));
}

StandardBasis standard_basis(const LocalIdeal& ideal, const MoraOptions& opts) {
    MonomialOrder order = MonomialOrder::local_negdegrevlex(2);
    StepBudget budget{opts.step_cap};
    std::vector<SP> gens;
    for (const auto& g : ideal.working_generators())
        gens.push_back(normalize_content(from_poly(g, order, -1)));
    std::vector<SP> minimal = complete_basis(std::move(gens), order, budget, -1);

    StandardBasis out;
    out.order = order;
    for (const auto& s : minimal) out.elements.push_back(to_poly(make_monic(s)));
    out.leading_ideal = leading_monomials(minimal);
    return out;
}

ExtNat colength(const StandardBasis& basis) {
    Staircase st = staircase_of(basis.leading_ideal);
    return st.finite ? ExtNat::of(st.count) : ExtNat::infinity();
}

ExtNat colength(const LocalIdeal& ideal, const MoraOptions& opts) {
    MonomialOrder order = MonomialOrder::local_negdegrevlex(2);
    std::vector<PolyQ> working = ideal.working_generators();
    if (working.empty()) return ExtNat::infinity(); // zero ideal

    auto load = [&](std::int64_t trunc) {
        std::vector<SP> gens;
        for (const auto& g : working) {
            SP s = normalize_content(from_poly(g, order, trunc));
            if (!s.zero()) gens.push_back(std::move(s));
        }
        return gens;
    };

    // Exact computation first, on a small budget: every easy ideal,
    // including the non-zero-dimensional ones, resolves here.
    try {
        StepBudget budget{std::min<long>(opts.step_cap, 4000)};
        Staircase st = staircase_of(leading_monomials(complete_basis(load(-1), order, budget, -1)));
        return st.finite ? ExtNat::of(st.count) : ExtNat::infinity();
    } catch (const step_limit_error&) {
        // fall through to the bounded-degree strategy
    }

    // Certified truncation: the leading ideals of I and I + m^D agree in
    // degrees below D, so once the truncated staircase closes with maximal
    // standard-monomial degree s <= D - 2, every monomial of degree s+1 lies
    // in L(I) and the two leading ideals coincide outright.
    for (std::int64_t D = 8; D <= 1024; D *= 2) {
        StepBudget budget{opts.step_cap};
        Staircase st;
        try {
            st = staircase_of(leading_monomials(complete_basis(load(D), order, budget, D)));
        } catch (const step_limit_error&) {
            break;
        }
        if (st.finite && st.max_standard_degree + 2 <= D) return ExtNat::of(st.count);
    }
    throw step_limit_error(
        "colength: computation did not certify within the step and degree caps");
}

LocalIdeal ideal_power(const LocalIdeal& ideal, int k) {
    if (k < 1) throw std::invalid_argument("ideal_power: exponent must be >= 1");
    if (k == 1) return ideal;
    std::vector<PolyQ> products{PolyQ::constant(2, 1)};
    for (int step = 0; step < k; ++step) {
        std::vector<PolyQ> next;
        for (const auto& p : products)
            for (const auto& g : ideal.generators) next.push_back(p * g);
        std::sort(next.begin(), next.end(),
                  [](const PolyQ& a, const PolyQ& b) { return a.terms() < b.terms(); });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        products = std::move(next);
    }
    LocalIdeal out = LocalIdeal::in_plane(std::move(products));
    out.quotient_divisor = ideal.quotient_divisor;
    return out;
}

ExtNat milnor(const PolyQ& f, const MoraOptions& opts) {
    validate_germ_poly(f, "milnor");
    if (f.is_zero() || f.ord() < ExtNat::of(1))
        throw std::invalid_argument("milnor: germ must vanish at the origin");
    return colength(LocalIdeal::in_plane({f.partial(0), f.partial(1)}), opts);
}

ExtNat tjurina(const PolyQ& f, const MoraOptions& opts) {
    validate_germ_poly(f, "tjurina");
    if (f.is_zero() || f.ord() < ExtNat::of(1))
        throw std::invalid_argument("tjurina: germ must vanish at the origin");
    return colength(LocalIdeal::in_plane({f, f.partial(0), f.partial(1)}), opts);
}

} // namespace curvelab
