#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace curvelab {

// A natural number extended by infinity. Orders, colengths and local
// intersection numbers take values here; infinity is a legitimate value
// (order of the zero polynomial, non-isolated intersection), not an error.
class ExtNat {
public:
    ExtNat() : finite_(true), value_(0) {}

    static ExtNat of(std::uint64_t v) {
        ExtNat e;
        e.value_ = v;
        return e;
    }

    static ExtNat infinity() {
        ExtNat e;
        e.finite_ = false;
        return e;
    }

    bool is_finite() const { return finite_; }

    std::uint64_t value() const {
        if (!finite_) throw std::logic_error("ExtNat: value() called on infinity");
        return value_;
    }

    bool operator==(const ExtNat& o) const {
        return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
    }
    bool operator!=(const ExtNat& o) const { return !(*this == o); }

    bool operator<(const ExtNat& o) const {
        if (!finite_) return false;
        if (!o.finite_) return true;
        return value_ < o.value_;
    }
    bool operator<=(const ExtNat& o) const { return *this < o || *this == o; }
    bool operator>(const ExtNat& o) const { return o < *this; }
    bool operator>=(const ExtNat& o) const { return o <= *this; }

    ExtNat operator+(const ExtNat& o) const {
        if (!finite_ || !o.finite_) return infinity();
        return of(value_ + o.value_);
    }

    std::string str() const { return finite_ ? std::to_string(value_) : "inf"; }

private:
    bool finite_;
    std::uint64_t value_;
};

inline std::ostream& operator<<(std::ostream& os, const ExtNat& e) { return os << e.str(); }

inline bool operator==(const ExtNat& e, std::uint64_t v) { return e == ExtNat::of(v); }
inline bool operator==(std::uint64_t v, const ExtNat& e) { return e == ExtNat::of(v); }

} // namespace curvelab
