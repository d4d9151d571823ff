#ifndef CUBESLICE_LP_HPP
#define CUBESLICE_LP_HPP

#include <optional>

#include "cubeslice/rational.hpp"

namespace cubeslice {

/// Homogeneous system: <c,x> = 0 for each equality, <c,x> > 0 for each strict.
struct ConstraintSystem {
    int ambient_dim = 0;
    std::vector<RatVec> equalities;
    std::vector<RatVec> strict;
};

struct FeasibilityResult {
    bool feasible = false;
    std::optional<RatVec> witness;  // present iff feasible; exact interior point
};

/// Decides whether some x satisfies every equality exactly and every strict
/// inequality strictly. The homogeneous cone is compactified by a box
/// normalization and the joint slack t is maximized with an exact rational
/// simplex (Bland's rule); feasible iff the optimum satisfies t > 0. The
/// witness is the slack-maximizing point, re-verified by substitution.
FeasibilityResult strict_feasible(const ConstraintSystem& s);

/// Dimension of the relative interior of the cone {equalities, strict as >=}
/// within strict satisfiability: ambient_dim - rank(equalities) when the
/// strict system is feasible, empty otherwise.
std::optional<int> cone_relint_dimension(const ConstraintSystem& s);

/// min c.x subject to Ax = b, x >= 0 (two-phase dense simplex, Bland's rule).
/// Returns nullopt when infeasible. Throws on unbounded problems: callers in
/// this project only pose bounded LPs.
struct LpSolution {
    Rational value;
    RatVec x;
};
std::optional<LpSolution> simplex_solve(const RatMat& a, const RatVec& b, const RatVec& c);

}  // namespace cubeslice

#endif
