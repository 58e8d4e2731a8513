#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pyramid/instance.hpp"
#include "pyramid/rational.hpp"

namespace pyramid {

using Matrix = std::vector<std::vector<Rational>>;

// Some x >= 0 with A x = b, or nullopt when none exists.
// Phase-one simplex in exact arithmetic with Bland's rule.
std::optional<std::vector<Rational>> nonnegative_solution(const Matrix& a, const std::vector<Rational>& b);

// lambda >= 0 with sum lambda = 1 and sum lambda_i * points[i] <= target componentwise.
std::optional<std::vector<Rational>> convex_domination(const std::vector<EdgeVector>& points,
                                                        const std::vector<Rational>& target);

// Closed interval of lambda in [0,1] with lambda*y1 + (1-lambda)*y2 <= target, if nonempty.
std::optional<std::pair<Rational, Rational>> pair_interval(const EdgeVector& y1, const EdgeVector& y2,
                                                           const EdgeVector& target);

}  // namespace pyramid
