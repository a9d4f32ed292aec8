#pragma once

#include <string>
#include <vector>

#include "gwscal/solver.hpp"

namespace gwscal {

// Rule identifiers for the sufficient-condition catalogue. Each rule is a
// checkable set of hypotheses; a certificate is issued only when every
// hypothesis evaluates to a definite yes.
inline constexpr const char* R_NEC = "R-nec";
inline constexpr const char* R_COMPACT_LEVEL = "R-compact-level";
inline constexpr const char* R_COMPACTF_FINITE = "R-compactF-finite";
inline constexpr const char* R_CORE = "R-core";
inline constexpr const char* R_COMPACTF_CASES = "R-compactF-cases";
inline constexpr const char* R_BOUNDEDBELOW_LINES = "R-boundedbelow-lines";
inline constexpr const char* R_POINTED_CONE = "R-pointed-cone";
inline constexpr const char* R_BOUNDEDBELOW_CASES = "R-boundedbelow-cases";
inline constexpr const char* R_CONVEX_STRICT = "R-convex-strict";
inline constexpr const char* R_CONE_KNOTNEG = "R-cone-knotneg";
inline constexpr const char* R_POLYHEDRAL_SEP = "R-polyhedral-sep";

/// Rules in evaluation order: most specific hypotheses first, so the report
/// names the strongest applicable result.
const std::vector<std::string>& existence_rule_order();

struct HypothesisCheck {
    std::string name;
    TriBool value = TriBool::unknown;
    std::string note;
};

struct RuleCheck {
    std::string rule;
    TriBool holds = TriBool::unknown;
    std::vector<HypothesisCheck> hypotheses;
};

/// The two necessary conditions: (5) the feasible range is nonempty, and
/// (6) some level set F cap (a - H + tk) is empty. Verdicts are exact for
/// finite F and sample-exact otherwise.
struct NecessaryConditions {
    TriBool feasible_nonempty = TriBool::unknown; // (5)
    TriBool some_level_empty = TriBool::unknown;  // (6)
    bool sample_relative = false;
};

NecessaryConditions necessary_conditions(const ProblemInstance& P, double t_lo, double t_hi, int samples);

RuleCheck check_rule(const ProblemInstance& P, const std::string& rule_id);

/// Direct checker for the separation lemma behind the polyhedral rules:
/// -D \ {0} inside int C and (M - u) missing int C imply every M cap (b - D)
/// bounded. The strict inclusion is verified on boundary, interior and
/// recession-ray samples of D; b feeds a bounded-intersection consistency
/// probe.
TriBool separation_boundedness(const std::vector<Point>& M, const SetRep& D, const SetRep& C,
                               const Point& u, const Point& b);

struct ExistenceReport {
    enum class Verdict { guaranteed_nonempty_compact, necessary_condition_fails, no_rule_applies };

    Verdict verdict = Verdict::no_rule_applies;
    std::string rule;             // set for a certificate
    std::string failed_condition; // set when a necessary condition fails
    NecessaryConditions necessary;
    std::vector<RuleCheck> checks;
};

const char* to_cstr(ExistenceReport::Verdict v);

/// Runs the necessary conditions, then the sufficient rules in order,
/// returning the first rule whose hypotheses all hold.
ExistenceReport existence_report(const ProblemInstance& P);

} // namespace gwscal
