#pragma once

// Exact feasibility of systems of linear inequalities over the rationals,
// by Fourier-Motzkin elimination with back-substitution of interior values.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shi {

using Rational = mpq_class;
using Point = std::vector<Rational>;

enum class Relation { Less, LessEqual, Equal, GreaterEqual, Greater };

/// coefficients · x  (relation)  rhs
struct LinearConstraint {
    std::vector<Rational> coefficients;
    Relation relation = Relation::Less;
    Rational rhs;
};

/// A point satisfying every constraint (strict ones strictly), or nullopt if
/// none exists. An empty system yields the origin.
std::optional<Point> feasible_interior(int dimension, const std::vector<LinearConstraint>& constraints);

bool satisfies(const Point& x, const LinearConstraint& constraint);

/// Always "p/q" with q >= 1, e.g. "1/2", "-3/1", "0/1".
std::string to_string(const Rational& value);
Rational parse_rational(std::string_view text);

}  // namespace shi
