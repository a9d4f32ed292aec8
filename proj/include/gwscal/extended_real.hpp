#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace gwscal {

/// A value in R united with {-inf, +inf}.
///
/// +inf encodes "no t is feasible" (inf of the empty set), -inf encodes
/// feasibility of every t along the scan line. Finite values are ordinary
/// doubles and are required to be finite.
class ExtendedReal {
public:
    enum class Kind { neg_inf, finite, pos_inf };

    static ExtendedReal neg_inf() { return ExtendedReal(Kind::neg_inf, 0.0); }
    static ExtendedReal pos_inf() { return ExtendedReal(Kind::pos_inf, 0.0); }
    static ExtendedReal finite(double v) {
        if (!std::isfinite(v)) throw std::invalid_argument("ExtendedReal::finite: value not finite");
        return ExtendedReal(Kind::finite, v);
    }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
    bool is_pos_inf() const { return kind_ == Kind::pos_inf; }

    /// Finite value; throws on +-inf.
    double value() const {
        if (kind_ != Kind::finite) throw std::logic_error("ExtendedReal::value on infinite value");
        return v_;
    }

    /// Value with infinities mapped to +-HUGE_VAL (for ordering only).
    double as_double() const {
        switch (kind_) {
        case Kind::neg_inf: return -HUGE_VAL;
        case Kind::pos_inf: return HUGE_VAL;
        default: return v_;
        }
    }

    bool operator==(const ExtendedReal& o) const {
        return kind_ == o.kind_ && (kind_ != Kind::finite || v_ == o.v_);
    }
    bool operator<(const ExtendedReal& o) const { return as_double() < o.as_double(); }
    bool operator<=(const ExtendedReal& o) const { return as_double() <= o.as_double(); }

private:
    ExtendedReal(Kind k, double v) : kind_(k), v_(v) {}
    Kind kind_;
    double v_;
};

/// Rendering used by the CLI and reports: number | "-inf" | "+inf".
std::string to_string(const ExtendedReal& x);

} // namespace gwscal
