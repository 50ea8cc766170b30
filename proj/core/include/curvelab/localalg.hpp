#pragma once

#include <optional>
#include <vector>

#include "curvelab/extnat.hpp"
#include "curvelab/poly.hpp"

namespace curvelab {

// Resource guard for the completion loop. Exceeding the cap raises
// step_limit_error, never a wrong answer.
struct MoraOptions {
    long step_cap = 1'000'000;
};

// An ideal of the local ring at the origin of the plane, or of a
// hypersurface quotient of it when a divisor is present. Quotients are
// handled by appending the divisor to every generating set: the colength of
// <gens, f> in the full local ring equals the length over O_{X,0}.
struct LocalIdeal {
    std::vector<PolyQ> generators;       // nonzero, nvars = 2
    std::optional<PolyQ> quotient_divisor; // nonzero with ord >= 1 when present

    static LocalIdeal in_plane(std::vector<PolyQ> gens);
    static LocalIdeal in_curve(PolyQ divisor, std::vector<PolyQ> gens);

    // Maximal ideal <x, y>, optionally in a hypersurface quotient.
    static LocalIdeal maximal(std::optional<PolyQ> divisor = std::nullopt);

    // Generators with the quotient divisor appended (the working set for
    // every standard-basis computation).
    std::vector<PolyQ> working_generators() const;
};

struct StandardBasis {
    std::vector<PolyQ> elements;      // monic, leading coefficient 1
    MonomialOrder order;              // local kind
    std::vector<ExpVec> leading_ideal; // minimal monomial generators
};

// Mora weak normal form with ecart selection: returns r with u*f = sum a_i
// basis_i + r for some local unit u, the leading term of r not divisible by
// any basis leading term (or r = 0). The result is normalized to leading
// coefficient 1. Requires a local order.
PolyQ mora_normal_form(const PolyQ& f, const std::vector<PolyQ>& basis,
                       const MonomialOrder& order, const MoraOptions& opts = {});

// S-pair completion under mora_normal_form.
StandardBasis standard_basis(const LocalIdeal& ideal, const MoraOptions& opts = {});

// Number of standard monomials of the leading ideal; infinity when the
// quotient is not zero-dimensional.
ExtNat colength(const LocalIdeal& ideal, const MoraOptions& opts = {});
ExtNat colength(const StandardBasis& basis);

// Generators of I^k: all k-fold products of generators of I.
LocalIdeal ideal_power(const LocalIdeal& ideal, int k);

// Milnor number: colength of the Jacobian ideal <f_x, f_y> in the full
// local ring. Requires ord(f) >= 1.
ExtNat milnor(const PolyQ& f, const MoraOptions& opts = {});

// Tjurina number: colength of <f, f_x, f_y>.
ExtNat tjurina(const PolyQ& f, const MoraOptions& opts = {});

} // namespace curvelab
