#include "shi/feasibility.hpp"

#include <map>
#include <utility>

#include "shi/errors.hpp"

namespace shi {

namespace {

// a · x < b (strict) or a · x <= b
struct Inequality {
    std::vector<Rational> a;
    Rational b;
    bool strict = false;
};

struct Bound {
    Rational b;
    bool strict = false;
};

std::vector<Inequality> to_inequalities(int dimension, const std::vector<LinearConstraint>& constraints) {
    std::vector<Inequality> out;
    for (auto c : constraints) {
        require(static_cast<int>(c.coefficients.size()) == dimension, "constraint has wrong dimension");
        c.rhs.canonicalize();
        std::vector<Rational> negated;
        for (auto& v : c.coefficients) {
            v.canonicalize();
            negated.push_back(-v);
        }
        switch (c.relation) {
            case Relation::Less:
                out.push_back({c.coefficients, c.rhs, true});
                break;
            case Relation::LessEqual:
                out.push_back({c.coefficients, c.rhs, false});
                break;
            case Relation::Greater:
                out.push_back({negated, -c.rhs, true});
                break;
            case Relation::GreaterEqual:
                out.push_back({negated, -c.rhs, false});
                break;
            case Relation::Equal:
                out.push_back({c.coefficients, c.rhs, false});
                out.push_back({negated, -c.rhs, false});
                break;
        }
    }
    return out;
}

// Scales each row so its leading coefficient has absolute value 1 and keeps
// only the tightest bound per direction. Returns false on a violated constant row.
bool normalize(std::vector<Inequality>& rows) {
    std::map<std::vector<Rational>, Bound> tightest;
    for (auto& row : rows) {
        std::size_t lead = 0;
        while (lead < row.a.size() && row.a[lead] == 0) {
            ++lead;
        }
        if (lead == row.a.size()) {
            const bool ok = row.strict ? 0 < row.b : 0 <= row.b;
            if (!ok) {
                return false;
            }
            continue;
        }
        const Rational scale = abs(row.a[lead]);
        for (auto& v : row.a) {
            v /= scale;
        }
        row.b /= scale;
        auto [it, inserted] = tightest.try_emplace(row.a, Bound{row.b, row.strict});
        if (!inserted) {
            Bound& kept = it->second;
            if (row.b < kept.b || (row.b == kept.b && row.strict)) {
                kept = {row.b, row.strict};
            }
        }
    }
    rows.clear();
    for (auto& [a, bound] : tightest) {
        rows.push_back({a, bound.b, bound.strict});
    }
    return true;
}

}  // namespace

std::optional<Point> feasible_interior(int dimension, const std::vector<LinearConstraint>& constraints) {
    const auto d = static_cast<std::size_t>(dimension);
    // levels[v] involves only variables 0..v-1
    std::vector<std::vector<Inequality>> levels(d + 1);
    levels[d] = to_inequalities(dimension, constraints);
    if (!normalize(levels[d])) {
        return std::nullopt;
    }
    for (std::size_t v = d; v-- > 0;) {
        std::vector<Inequality> upper;
        std::vector<Inequality> lower;
        std::vector<Inequality> next;
        for (const auto& row : levels[v + 1]) {
            if (row.a[v] > 0) {
                upper.push_back(row);
            } else if (row.a[v] < 0) {
                lower.push_back(row);
            } else {
                next.push_back(row);
            }
        }
        for (const auto& up : upper) {
            for (const auto& lo : lower) {
                const Rational su = up.a[v];
                const Rational sl = -lo.a[v];
                Inequality combined;
                combined.a.resize(d);
                for (std::size_t k = 0; k < d; ++k) {
                    combined.a[k] = up.a[k] / su + lo.a[k] / sl;
                }
                combined.a[v] = 0;
                combined.b = up.b / su + lo.b / sl;
                combined.strict = up.strict || lo.strict;
                next.push_back(std::move(combined));
            }
        }
        if (!normalize(next)) {
            return std::nullopt;
        }
        levels[v] = std::move(next);
    }

    Point x(d, Rational(0));
    for (std::size_t v = 0; v < d; ++v) {
        std::optional<Bound> lo;
        std::optional<Bound> hi;
        for (const auto& row : levels[v + 1]) {
            if (row.a[v] == 0) {
                continue;
            }
            Rational rest = row.b;
            for (std::size_t k = 0; k < v; ++k) {
                rest -= row.a[k] * x[k];
            }
            const Rational limit = rest / row.a[v];
            if (row.a[v] > 0) {
                if (!hi || limit < hi->b || (limit == hi->b && row.strict)) {
                    hi = Bound{limit, row.strict};
                }
            } else if (!lo || limit > lo->b || (limit == lo->b && row.strict)) {
                lo = Bound{limit, row.strict};
            }
        }
        if (lo && hi) {
            if (lo->b < hi->b) {
                x[v] = (lo->b + hi->b) / 2;
            } else if (lo->b == hi->b && !lo->strict && !hi->strict) {
                x[v] = lo->b;
            } else {
                throw ConsistencyError("back-substitution found an empty interval");
            }
        } else if (lo) {
            x[v] = lo->b + 1;
        } else if (hi) {
            x[v] = hi->b - 1;
        }
        x[v].canonicalize();
    }
    for (const auto& c : constraints) {
        if (!satisfies(x, c)) {
            throw ConsistencyError("feasibility witness violates a constraint");
        }
    }
    return x;
}

bool satisfies(const Point& x, const LinearConstraint& constraint) {
    Rational lhs = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        lhs += constraint.coefficients[k] * x[k];
    }
    lhs.canonicalize();
    Rational rhs = constraint.rhs;
    rhs.canonicalize();
    switch (constraint.relation) {
        case Relation::Less:
            return lhs < rhs;
        case Relation::LessEqual:
            return lhs <= rhs;
        case Relation::Equal:
            return lhs == rhs;
        case Relation::GreaterEqual:
            return lhs >= rhs;
        case Relation::Greater:
            return lhs > rhs;
    }
    return false;
}

std::string to_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    Rational out;
    require(!text.empty() && out.set_str(std::string(text), 10) == 0 && out.get_den() != 0,
            "not a rational: " + std::string(text));
    out.canonicalize();
    return out;
}

}  // namespace shi
