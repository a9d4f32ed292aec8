#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwscal {

/// A point (or direction) in R^l, stored dense.
using Point = std::vector<double>;

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void check_same_dim(const Point& a, const Point& b, const char* where) {
    if (a.size() != b.size())
        throw DimensionMismatch(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

inline bool is_finite_point(const Point& p) {
    for (double v : p)
        if (!std::isfinite(v)) return false;
    return true;
}

inline double dot(const Point& a, const Point& b) {
    check_same_dim(a, b, "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Point sub(const Point& a, const Point& b) {
    check_same_dim(a, b, "sub");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point add(const Point& a, const Point& b) {
    check_same_dim(a, b, "add");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Point scaled(const Point& a, double t) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
    return r;
}

/// a + t*k, the workhorse of every level-set membership test.
inline Point axpy(const Point& a, double t, const Point& k) {
    check_same_dim(a, k, "axpy");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + t * k[i];
    return r;
}

inline double inf_norm(const Point& a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::fabs(v));
    return m;
}

inline double norm2(const Point& a) { return std::sqrt(dot(a, a)); }

inline bool is_zero(const Point& a, double tol = 0.0) { return inf_norm(a) <= tol; }

/// Membership tolerance for comparisons with equality: 1e-12 * (1 + |y|_inf).
inline double geom_eps(const Point& y) { return 1e-12 * (1.0 + inf_norm(y)); }

inline bool points_close(const Point& a, const Point& b, double eps) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::fabs(a[i] - b[i]) > eps) return false;
    return true;
}

} // namespace gwscal
