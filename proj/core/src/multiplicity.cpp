#include "curvelab/multiplicity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>

#include "curvelab/errors.hpp"

namespace curvelab {

std::vector<std::uint64_t> hilbert_samuel_sequence(const LocalIdeal& ideal, int imax,
                                                   const MoraOptions& opts) {
    if (imax < 3) throw std::invalid_argument("hilbert_samuel_sequence: imax must be >= 3");
    std::vector<std::uint64_t> lengths;
    for (int i = 1; i <= imax; ++i) {
        ExtNat len = colength(ideal_power(ideal, i), opts);
        if (!len.is_finite())
            throw std::invalid_argument(
                "hilbert_samuel_sequence: ideal is not m-primary (infinite length at power " +
                std::to_string(i) + ")");
        lengths.push_back(len.value());
    }
    return lengths;
}

namespace {

std::vector<std::int64_t> nth_differences(const std::vector<std::uint64_t>& lengths, int n) {
    std::vector<std::int64_t> d(lengths.begin(), lengths.end());
    for (int level = 0; level < n; ++level) {
        if (d.size() < 2) return {};
        std::vector<std::int64_t> next;
        for (std::size_t i = 0; i + 1 < d.size(); ++i) next.push_back(d[i + 1] - d[i]);
        d = std::move(next);
    }
    return d;
}

} // namespace

HSRecord hs_record(const LocalIdeal& ideal, const HSOptions& opts) {
    HSRecord rec;
    rec.dim = ideal.quotient_divisor ? 1 : 2;

    for (int i = 1; i <= opts.imax_cap; ++i) {
        ExtNat len = colength(ideal_power(ideal, i), opts.mora);
        if (!len.is_finite())
            throw std::invalid_argument(
                "hs_multiplicity: ideal is not m-primary (infinite length at power " +
                std::to_string(i) + ")");
        rec.lengths.push_back(len.value());

        auto diffs = nth_differences(rec.lengths, rec.dim);
        if (diffs.size() >= 3) {
            std::size_t k = diffs.size();
            if (diffs[k - 1] == diffs[k - 2] && diffs[k - 2] == diffs[k - 3]) {
                rec.multiplicity = diffs[k - 1];
                rec.stabilization_index = static_cast<int>(k) - 2;
                return rec;
            }
        }
    }
    throw step_limit_error("hs_multiplicity: no stabilization within imax cap " +
                           std::to_string(opts.imax_cap));
}

std::int64_t hs_multiplicity(const LocalIdeal& ideal, const HSOptions& opts) {
    return hs_record(ideal, opts).multiplicity;
}

ExtNat intersection_multiplicity(const PolyQ& f, const PolyQ& g, const MoraOptions& opts) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("intersection_multiplicity: germs must be nonzero");
    if (f.constant_term() != 0 || g.constant_term() != 0)
        throw std::invalid_argument("intersection_multiplicity: germs must vanish at the origin");
    return colength(LocalIdeal::in_plane({f, g}), opts);
}

LineGerm LineGerm::of(const Rat& ra, const Rat& rb) {
    if (ra == 0 && rb == 0) throw std::invalid_argument("LineGerm: direction must be nonzero");
    Int den_lcm;
    mpz_lcm(den_lcm.get_mpz_t(), ra.get_den().get_mpz_t(), rb.get_den().get_mpz_t());
    Int ia = ra.get_num() * (den_lcm / ra.get_den());
    Int ib = rb.get_num() * (den_lcm / rb.get_den());
    Int g = gcd(ia, ib);
    ia /= g;
    ib /= g;
    if (ia < 0 || (ia == 0 && ib < 0)) {
        ia = -ia;
        ib = -ib;
    }
    LineGerm l;
    l.a = ia;
    l.b = ib;
    return l;
}

PolyQ LineGerm::line_poly() const {
    // b x - a y, sign-normalized so the degrevlex leading coefficient is
    // positive (prints as "y" rather than "-y" for the horizontal direction).
    PolyQ p = PolyQ::variable(2, 0).scaled(Rat(b)) - PolyQ::variable(2, 1).scaled(Rat(a));
    if (b < 0 || (b == 0 && a > 0)) p = -p;
    return p;
}

std::string LineGerm::str() const { return "[" + int_str(a) + ":" + int_str(b) + "]"; }

bool LineGerm::operator<(const LineGerm& o) const {
    Int ha = std::max(abs(a), abs(b)), hb = std::max(abs(o.a), abs(o.b));
    if (ha != hb) return ha < hb;
    if (a != o.a) return a < o.a;
    return b < o.b;
}

MinLineResult min_line_multiplicity(const PolyQ& f, const std::vector<LineGerm>& extra,
                                    const MoraOptions& opts) {
    if (f.nvars() != 2) throw std::invalid_argument("min_line_multiplicity: requires nvars = 2");
    if (f.is_zero() || f.constant_term() != 0)
        throw std::invalid_argument("min_line_multiplicity: germ must vanish at the origin");
    const std::int64_t m = static_cast<std::int64_t>(f.ord().value());

    std::set<LineGerm> lines;
    const long h = m + 2;
    for (long a = -h; a <= h; ++a)
        for (long b = -h; b <= h; ++b) {
            if (a == 0 && b == 0) continue;
            lines.insert(LineGerm::of(Rat(a), Rat(b)));
        }
    for (const auto& l : extra) lines.insert(l);

    MinLineResult res;
    bool have_min = false;
    ExtNat best = ExtNat::infinity();
    for (const auto& line : lines) {
        ExtNat i = intersection_multiplicity(f, line.line_poly(), opts);
        res.samples.push_back({line, i});
        if (i.is_finite() && (!have_min || i < best)) {
            best = i;
            res.witness = line;
            have_min = true;
        }
    }
    if (!have_min)
        throw std::logic_error(
            "min_line_multiplicity: every sampled line is a component; sampling bug");
    res.multiplicity = static_cast<std::int64_t>(best.value());
    if (res.multiplicity != m)
        throw std::logic_error("min_line_multiplicity: minimum " +
                               std::to_string(res.multiplicity) + " differs from ord " +
                               std::to_string(m));
    return res;
}

// ---------------------------------------------------------------------------
// dynamic_multiplicity
// ---------------------------------------------------------------------------

namespace {

using Cplx = std::complex<double>;

struct IllConditioned {};

// f restricted to the parametrized line p + t*d, as a dense polynomial in t.
std::vector<Cplx> restrict_to_line(const PolyQ& f, Cplx px, Cplx py, Cplx dx, Cplx dy) {
    std::vector<Cplx> out{Cplx(0.0)};
    for (const auto& [mono, coef] : f.terms()) {
        std::vector<Cplx> term{Cplx(mpq_get_d(coef.get_mpq_t()))};
        auto mul_linear = [&term](Cplx c0, Cplx c1, int power) {
            for (int k = 0; k < power; ++k) {
                std::vector<Cplx> next(term.size() + 1, Cplx(0.0));
                for (std::size_t i = 0; i < term.size(); ++i) {
                    next[i] += term[i] * c0;
                    next[i + 1] += term[i] * c1;
                }
                term = std::move(next);
            }
        };
        mul_linear(px, dx, mono.e[0]);
        mul_linear(py, dy, mono.e[1]);
        if (out.size() < term.size()) out.resize(term.size(), Cplx(0.0));
        for (std::size_t i = 0; i < term.size(); ++i) out[i] += term[i];
    }
    return out;
}

Cplx eval_poly(const std::vector<Cplx>& g, Cplx z) {
    Cplx acc(0.0);
    for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// Winding number of g around the circle |t| = radius, by adaptive argument
// tracking: adjacent samples must differ in argument by less than pi/2, or
// the arc is bisected. Values too close to zero abort the attempt (a root
// sits near the circle) and trigger a radius jitter upstream.
long winding_number(const std::vector<Cplx>& g, double radius) {
    double scale = 0.0;
    double r_pow = 1.0;
    for (const auto& c : g) {
        scale += std::abs(c) * r_pow;
        r_pow *= radius;
    }
    if (scale == 0.0) throw IllConditioned{};
    const double floor_tol = scale * 1e-13;

    struct Node {
        double theta;
        Cplx value;
    };
    auto sample = [&](double theta) {
        Cplx z = std::polar(radius, theta);
        Cplx v = eval_poly(g, z);
        if (std::abs(v) < floor_tol) throw IllConditioned{};
        return Node{theta, v};
    };

    constexpr int kInitial = 64;
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<Node> ring;
    ring.reserve(kInitial + 1);
    for (int k = 0; k <= kInitial; ++k) ring.push_back(sample(two_pi * k / kInitial));

    double total = 0.0;
    auto arc = [&](const Node& a, const Node& b, int depth, auto&& self) -> double {
        double delta = std::arg(b.value / a.value);
        if (std::abs(delta) <= std::numbers::pi / 2) return delta;
        if (depth > 32) throw IllConditioned{};
        Node mid = sample(0.5 * (a.theta + b.theta));
        return self(a, mid, depth + 1, self) + self(mid, b, depth + 1, self);
    };
    for (std::size_t k = 0; k + 1 < ring.size(); ++k)
        total += arc(ring[k], ring[k + 1], 0, arc);

    double w = total / two_pi;
    long rounded = std::lround(w);
    if (std::abs(w - static_cast<double>(rounded)) > 1e-6) throw IllConditioned{};
    return rounded;
}

} // namespace

std::int64_t dynamic_multiplicity(const PolyQ& f, const DynOptions& opts) {
    if (f.nvars() != 2) throw std::invalid_argument("dynamic_multiplicity: requires nvars = 2");
    if (f.is_zero() || f.constant_term() != 0)
        throw std::invalid_argument("dynamic_multiplicity: germ must vanish at the origin");
    if (!(opts.eps > opts.tau && opts.tau > 0))
        throw std::invalid_argument("dynamic_multiplicity: requires eps > tau > 0");
    if (opts.trials < 1) throw std::invalid_argument("dynamic_multiplicity: trials must be >= 1");
    if (!milnor(f, opts.mora).is_finite())
        throw std::invalid_argument("dynamic_multiplicity: germ has a non-isolated singularity");

    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    std::int64_t count = -1;
    for (int trial = 0; trial < opts.trials; ++trial) {
        double dir = angle(rng), off = angle(rng);
        Cplx dx(std::cos(dir)), dy(std::sin(dir));
        Cplx px(opts.tau * std::cos(off)), py(opts.tau * std::sin(off));
        std::vector<Cplx> g = restrict_to_line(f, px, py, dx, dy);

        long k = -1;
        bool ok = false;
        for (int retry = 0; retry <= opts.max_retries && !ok; ++retry) {
            double radius = opts.eps * (1.0 + 0.083 * retry);
            try {
                k = winding_number(g, radius);
                ok = true;
            } catch (const IllConditioned&) {
                // root near the circle; jitter and retry
            }
        }
        if (!ok)
            throw std::runtime_error(
                "dynamic_multiplicity: winding-number computation ill-conditioned after " +
                std::to_string(opts.max_retries + 1) + " radius jitters");
        if (k < 0)
            throw std::runtime_error("dynamic_multiplicity: negative winding number (internal)");
        if (count >= 0 && k != count)
            throw std::runtime_error("dynamic_multiplicity: trials disagree (" +
                                     std::to_string(count) + " vs " + std::to_string(k) + ")");
        count = k;
    }
    return count;
}

} // namespace curvelab
