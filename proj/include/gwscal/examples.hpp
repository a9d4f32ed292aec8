#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwscal/existence.hpp"
#include "gwscal/solver.hpp"

namespace gwscal {

/// One entry of the builtin corpus: the instance plus the expected solve
/// status and existence verdict, with optional value/minimizer checks.
struct BuiltinExample {
    std::string id;
    std::string description;
    ProblemInstance instance;
    SolveResult::Status expected_status;
    ExistenceReport::Verdict expected_verdict;
    std::string expected_rule;                // when a certificate is expected
    std::optional<double> expected_t;         // optimal value, when pinned
    std::optional<std::vector<Point>> expected_minimizers;
};

const std::vector<BuiltinExample>& builtin_examples();
const BuiltinExample* find_example(const std::string& id);

struct CorpusOutcome {
    std::string id;
    bool pass = false;
    std::string detail;
};

/// Solves and checks every corpus entry against its expectations. An options
/// override (looser tol, smaller t_max) rebuilds each instance accordingly;
/// expectations are status-level plus tolerance-scaled values, so a loose tol
/// still matches.
std::vector<CorpusOutcome> run_examples(std::optional<PhiOptions> override_opt = std::nullopt);

/// Distance from p to the ray {base + s * dir : s >= 0}.
double distance_to_ray(const Point& p, const Point& base, const Point& dir);

} // namespace gwscal
