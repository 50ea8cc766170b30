#pragma once

// Brute-force reference computations for the test suites. Everything here is
// kept independent of the library code paths it cross-checks: dense integer
// polynomial expansion, direct staircase counting, and a Sylvester-matrix
// resultant evaluated by Gaussian elimination.

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curvelab/extnat.hpp"
#include "curvelab/poly.hpp"
#include "curvelab/rational.hpp"

namespace oracle {

using curvelab::ExtNat;
using curvelab::PolyQ;
using curvelab::Rat;

// --- dense 2-variable integer polynomials -------------------------------

using Dense2 = std::map<std::pair<int, int>, long long>;

inline Dense2 dense_mul(const Dense2& a, const Dense2& b) {
    Dense2 r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            auto key = std::make_pair(ma.first + mb.first, ma.second + mb.second);
            r[key] += ca * cb;
            if (r[key] == 0) r.erase(key);
        }
    return r;
}

inline Dense2 dense_add(const Dense2& a, const Dense2& b) {
    Dense2 r = a;
    for (const auto& [m, c] : b) {
        r[m] += c;
        if (r[m] == 0) r.erase(m);
    }
    return r;
}

inline Dense2 to_dense(const PolyQ& f) {
    Dense2 r;
    for (const auto& [m, c] : f.terms()) {
        if (c.get_den() != 1) throw std::runtime_error("to_dense: non-integer coefficient");
        r[{m.e[0], m.e[1]}] = static_cast<long long>(c.get_num().get_si());
    }
    return r;
}

inline bool dense_eq(const Dense2& a, const PolyQ& f) { return a == to_dense(f); }

// --- staircase counting for monomial ideals ------------------------------

// Number of lattice points not above any generator; -1 encodes infinity.
inline long long staircase_count(const std::vector<std::pair<int, int>>& gens) {
    int bx = -1, by = -1;
    for (auto [a, b] : gens) {
        if (b == 0) bx = bx < 0 ? a : std::min(bx, a);
        if (a == 0) by = by < 0 ? b : std::min(by, b);
    }
    if (bx < 0 || by < 0) return -1;
    long long count = 0;
    for (int i = 0; i < bx; ++i)
        for (int j = 0; j < by; ++j) {
            bool divisible = false;
            for (auto [a, b] : gens)
                if (a <= i && b <= j) {
                    divisible = true;
                    break;
                }
            if (!divisible) ++count;
        }
    return count;
}

// --- resultant-based intersection numbers --------------------------------

// f as a polynomial in y with coefficients dense in x.
inline std::vector<std::vector<Rat>> coeffs_in_y(const PolyQ& f) {
    int dy = 0, dx = 0;
    for (const auto& [m, c] : f.terms()) {
        dx = std::max<int>(dx, m.e[0]);
        dy = std::max<int>(dy, m.e[1]);
    }
    std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(dy) + 1,
                                       std::vector<Rat>(static_cast<std::size_t>(dx) + 1, Rat(0)));
    for (const auto& [m, c] : f.terms())
        rows[static_cast<std::size_t>(m.e[1])][static_cast<std::size_t>(m.e[0])] = c;
    while (rows.size() > 1) {
        bool zero = true;
        for (const auto& c : rows.back())
            if (c != 0) zero = false;
        if (!zero) break;
        rows.pop_back();
    }
    return rows;
}

inline Rat eval_x(const std::vector<Rat>& ux, const Rat& x0) {
    Rat acc = 0;
    for (auto it = ux.rbegin(); it != ux.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

// Determinant by exact Gaussian elimination.
inline Rat det(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            d = -d;
        }
        d *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return d;
}

// Res_y(f, g) evaluated at x = x0 via the Sylvester matrix.
inline Rat resultant_y_at(const PolyQ& f, const PolyQ& g, const Rat& x0) {
    auto fy = coeffs_in_y(f);
    auto gy = coeffs_in_y(g);
    const std::size_t df = fy.size() - 1, dg = gy.size() - 1;
    if (df == 0 && dg == 0) return Rat(1);
    const std::size_t n = df + dg;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t r = 0; r < dg; ++r)
        for (std::size_t k = 0; k <= df; ++k) m[r][r + k] = eval_x(fy[df - k], x0);
    for (std::size_t r = 0; r < df; ++r)
        for (std::size_t k = 0; k <= dg; ++k) m[dg + r][r + k] = eval_x(gy[dg - k], x0);
    return det(m);
}

// Order of vanishing at x = 0 of Res_y(f, g), recovered by exact
// interpolation of the resultant at distinct rational points.
inline std::optional<long long> resultant_ord_x(const PolyQ& f, const PolyQ& g) {
    int degf = static_cast<int>(f.degree()), degg = static_cast<int>(g.degree());
    int bound = 2 * degf * degg + 1;
    std::vector<Rat> xs, vals;
    for (int i = 1; i <= bound; ++i) {
        Rat x0(1, 16 * i); // small points: well away from distant roots
        xs.push_back(x0);
        vals.push_back(resultant_y_at(f, g, x0));
    }
    // Newton divided differences give the interpolating polynomial.
    std::vector<std::vector<Rat>> dd{vals};
    for (int lvl = 1; lvl < bound; ++lvl) {
        std::vector<Rat> row;
        for (int i = 0; i + lvl < bound; ++i)
            row.push_back((dd.back()[static_cast<std::size_t>(i) + 1] - dd.back()[static_cast<std::size_t>(i)]) /
                          (xs[static_cast<std::size_t>(i + lvl)] - xs[static_cast<std::size_t>(i)]));
        dd.push_back(std::move(row));
    }
    // Expand Newton form to monomial coefficients.
    std::vector<Rat> poly{Rat(0)};
    std::vector<Rat> basis{Rat(1)};
    for (int lvl = 0; lvl < bound; ++lvl) {
        if (poly.size() < basis.size()) poly.resize(basis.size(), Rat(0));
        for (std::size_t i = 0; i < basis.size(); ++i) poly[i] += dd[static_cast<std::size_t>(lvl)][0] * basis[i];
        std::vector<Rat> next(basis.size() + 1, Rat(0));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            next[i + 1] += basis[i];
            next[i] -= basis[i] * xs[static_cast<std::size_t>(lvl)];
        }
        basis = std::move(next);
    }
    bool all_zero = true;
    for (const auto& c : poly)
        if (c != 0) all_zero = false;
    if (all_zero) return std::nullopt; // resultant vanishes identically
    long long o = 0;
    while (poly[static_cast<std::size_t>(o)] == 0) ++o;
    return o;
}

// Independent intersection number of two germs at the origin: the minimum
// over a few shears x -> x + c*y of ord_x Res_y. A shear is admissible when
// both germs stay y-regular; generic shears also move any other intersection
// points off the line x = 0, which is why the minimum is taken.
inline ExtNat intersection_oracle(const PolyQ& f, const PolyQ& g) {
    std::optional<long long> best;
    for (int c = 0; c <= 6; ++c) {
        PolyQ fs = f.substitute_linear(Rat(1), Rat(c), Rat(0), Rat(1));
        PolyQ gs = g.substitute_linear(Rat(1), Rat(c), Rat(0), Rat(1));
        bool f_regular = false, g_regular = false;
        for (const auto& [m, coef] : fs.terms())
            if (m.e[0] == 0) f_regular = true;
        for (const auto& [m, coef] : gs.terms())
            if (m.e[0] == 0) g_regular = true;
        if (!f_regular || !g_regular) continue;
        auto o = resultant_ord_x(fs, gs);
        if (!o) return ExtNat::infinity(); // shared component
        if (!best || *o < *best) best = *o;
    }
    if (!best) throw std::runtime_error("intersection_oracle: no admissible shear");
    return ExtNat::of(static_cast<std::uint64_t>(*best));
}

} // namespace oracle
