#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvelab/localalg.hpp"

namespace curvelab {

// Length data of the powers of an m-primary ideal. lengths[i-1] holds
// length(O/I^i); for large i the map i -> length is a polynomial of degree
// dim whose normalized leading coefficient is the multiplicity.
struct HSRecord {
    std::vector<std::uint64_t> lengths;
    int dim = 1;
    std::int64_t multiplicity = 0;
    int stabilization_index = 0; // 1-based start of the stable difference window
};

struct HSOptions {
    int imax_cap = 64;
    MoraOptions mora;
};

// lengths[i-1] = colength(I^i) for i = 1..imax, in the ideal's ambient ring.
// Throws when some power fails to be zero-dimensional (the radical of I is
// then smaller than the maximal ideal).
std::vector<std::uint64_t> hilbert_samuel_sequence(const LocalIdeal& ideal, int imax,
                                                   const MoraOptions& opts = {});

// Detects eventual polynomial behavior of the length sequence by iterated
// finite differences (three consecutive equal values), extending the range
// adaptively up to the cap.
HSRecord hs_record(const LocalIdeal& ideal, const HSOptions& opts = {});
std::int64_t hs_multiplicity(const LocalIdeal& ideal, const HSOptions& opts = {});

// Local intersection number of two plane germs at the origin: the colength
// of <f, g>. Infinity signals a shared component through the origin.
ExtNat intersection_multiplicity(const PolyQ& f, const PolyQ& g, const MoraOptions& opts = {});

// Direction (a, b) of the line {b x - a y = 0} through the origin, stored in
// lowest terms with canonical sign.
struct LineGerm {
    Int a, b;

    static LineGerm of(const Rat& a, const Rat& b);
    PolyQ line_poly() const; // monic-normalized defining equation
    std::string str() const; // "[a:b]"
    bool operator==(const LineGerm& o) const { return a == o.a && b == o.b; }
    bool operator<(const LineGerm& o) const;
};

struct LineSample {
    LineGerm line;
    ExtNat multiplicity; // infinity marks a component of the germ
};

struct MinLineResult {
    std::int64_t multiplicity = 0;
    LineGerm witness;
    std::vector<LineSample> samples;
};

// Minimum of intersection_multiplicity(f, line) over all rational directions
// of height <= ord(f) + 2 plus the supplied extras. The minimum provably
// equals ord(f); that identity is asserted before returning.
MinLineResult min_line_multiplicity(const PolyQ& f, const std::vector<LineGerm>& extra = {},
                                    const MoraOptions& opts = {});

// Floating-point verification device: counts intersection points of the germ
// with a random nearby line inside a small disc, by the argument principle.
// The only module operation that touches floating point; nothing exact
// consumes its output.
struct DynOptions {
    double eps = 1e-3;   // counting disc radius
    double tau = 1e-6;   // offset of the nearby line from the origin
    int trials = 8;
    std::uint64_t seed = 1729;
    int max_retries = 6; // eps jitters on ill-conditioned winding computations
    MoraOptions mora;
};

std::int64_t dynamic_multiplicity(const PolyQ& f, const DynOptions& opts = {});

} // namespace curvelab
