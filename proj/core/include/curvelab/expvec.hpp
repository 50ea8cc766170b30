#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace curvelab {

inline constexpr int kMaxVars = 8;

// Exponent vector of a monomial. Fixed-capacity; germ computations use
// nvars = 2 throughout, the parser accepts up to kMaxVars.
struct ExpVec {
    std::array<std::int32_t, kMaxVars> e{};

    ExpVec() = default;

    static ExpVec of(std::initializer_list<std::int32_t> exps) {
        ExpVec v;
        int i = 0;
        for (auto x : exps) {
            if (i >= kMaxVars) throw std::invalid_argument("ExpVec: too many exponents");
            if (x < 0) throw std::invalid_argument("ExpVec: negative exponent");
            v.e[static_cast<std::size_t>(i++)] = x;
        }
        return v;
    }

    static ExpVec unit(int var) {
        ExpVec v;
        v.e[static_cast<std::size_t>(var)] = 1;
        return v;
    }

    std::int64_t total_degree() const {
        std::int64_t d = 0;
        for (auto x : e) d += x;
        return d;
    }

    bool divides(const ExpVec& other) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[static_cast<std::size_t>(i)] > other.e[static_cast<std::size_t>(i)]) return false;
        return true;
    }

    ExpVec operator+(const ExpVec& o) const {
        ExpVec r;
        for (int i = 0; i < kMaxVars; ++i)
            r.e[static_cast<std::size_t>(i)] =
                e[static_cast<std::size_t>(i)] + o.e[static_cast<std::size_t>(i)];
        return r;
    }

    // Componentwise difference; caller guarantees divisibility.
    ExpVec operator-(const ExpVec& o) const {
        ExpVec r;
        for (int i = 0; i < kMaxVars; ++i) {
            auto d = e[static_cast<std::size_t>(i)] - o.e[static_cast<std::size_t>(i)];
            if (d < 0) throw std::logic_error("ExpVec: subtraction underflow");
            r.e[static_cast<std::size_t>(i)] = d;
        }
        return r;
    }

    auto operator<=>(const ExpVec& o) const = default;
};

// Monomial orders. The global kind refines ascending total degree (leading
// terms have the highest degree); the local kind ranks lower total degree as
// larger, so leading terms pick out the lowest-order parts, as computations
// in the local ring at the origin require.
struct MonomialOrder {
    enum class Kind { global_degrevlex, local_negdegrevlex };

    Kind kind = Kind::global_degrevlex;
    int nvars = 2;
    std::array<std::int32_t, kMaxVars> perm{0, 1, 2, 3, 4, 5, 6, 7};

    static MonomialOrder global_degrevlex(int nvars) {
        MonomialOrder o;
        o.kind = Kind::global_degrevlex;
        o.nvars = nvars;
        return o;
    }

    static MonomialOrder local_negdegrevlex(int nvars) {
        MonomialOrder o;
        o.kind = Kind::local_negdegrevlex;
        o.nvars = nvars;
        return o;
    }

    bool is_local() const { return kind == Kind::local_negdegrevlex; }

    // Three-way comparison; > 0 means a is greater (closer to leading).
    int cmp(const ExpVec& a, const ExpVec& b) const {
        std::int64_t da = 0, db = 0;
        std::array<std::int32_t, kMaxVars> pa{}, pb{};
        for (int i = 0; i < nvars; ++i) {
            pa[static_cast<std::size_t>(i)] = a.e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            pb[static_cast<std::size_t>(i)] = b.e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            da += pa[static_cast<std::size_t>(i)];
            db += pb[static_cast<std::size_t>(i)];
        }
        if (da != db) {
            bool a_greater = (kind == Kind::global_degrevlex) ? (da > db) : (da < db);
            return a_greater ? 1 : -1;
        }
        // Degree tie: reverse lexicographic. The monomial whose last
        // differing exponent is smaller is the greater one.
        for (int i = nvars - 1; i >= 0; --i) {
            auto ea = pa[static_cast<std::size_t>(i)];
            auto eb = pb[static_cast<std::size_t>(i)];
            if (ea != eb) return ea < eb ? 1 : -1;
        }
        return 0;
    }

    bool less(const ExpVec& a, const ExpVec& b) const { return cmp(a, b) < 0; }
    bool greater(const ExpVec& a, const ExpVec& b) const { return cmp(a, b) > 0; }
};

} // namespace curvelab
