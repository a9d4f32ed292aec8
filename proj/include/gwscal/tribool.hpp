#pragma once

namespace gwscal {

/// Three-valued verdict for predicates that cannot always decide exactly.
/// `unknown` is only produced by oracle- or sample-based checks.
enum class TriBool { no, yes, unknown };

inline TriBool tri_from(bool b) { return b ? TriBool::yes : TriBool::no; }

inline TriBool tri_not(TriBool t) {
    switch (t) {
    case TriBool::yes: return TriBool::no;
    case TriBool::no: return TriBool::yes;
    default: return TriBool::unknown;
    }
}

/// Conjunction: any `no` wins, otherwise `unknown` taints the result.
inline TriBool tri_and(TriBool a, TriBool b) {
    if (a == TriBool::no || b == TriBool::no) return TriBool::no;
    if (a == TriBool::unknown || b == TriBool::unknown) return TriBool::unknown;
    return TriBool::yes;
}

inline TriBool tri_or(TriBool a, TriBool b) {
    if (a == TriBool::yes || b == TriBool::yes) return TriBool::yes;
    if (a == TriBool::unknown || b == TriBool::unknown) return TriBool::unknown;
    return TriBool::no;
}

inline bool definitely(TriBool t) { return t == TriBool::yes; }
inline bool definitely_not(TriBool t) { return t == TriBool::no; }

inline const char* to_cstr(TriBool t) {
    switch (t) {
    case TriBool::yes: return "true";
    case TriBool::no: return "false";
    default: return "unknown";
    }
}

} // namespace gwscal
