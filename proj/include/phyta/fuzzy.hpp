#ifndef PHYTA_FUZZY_HPP
#define PHYTA_FUZZY_HPP

#include <array>

#include "phyta/errors.hpp"

namespace phyta {

/// Triangular fuzzy number (a1, a2, a3): membership rises linearly from a1
/// to the mode a2 and falls back to zero at a3. Components stay ordered.
struct TriangularFuzzy {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    TriangularFuzzy() = default;
    TriangularFuzzy(double a1_, double a2_, double a3_);

    static TriangularFuzzy crisp(double c) { return {c, c, c}; }
    /// Builds a valid number from possibly unordered components.
    static TriangularFuzzy sorted(double x, double y, double z);

    bool operator==(const TriangularFuzzy&) const = default;
};

/// Trapezoidal fuzzy number (a1, a2, a3, a4) with plateau [a2, a3].
struct TrapezoidalFuzzy {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;

    TrapezoidalFuzzy() = default;
    TrapezoidalFuzzy(double a1_, double a2_, double a3_, double a4_);

    static TrapezoidalFuzzy sorted(double w, double x, double y, double z);

    bool operator==(const TrapezoidalFuzzy&) const = default;
};

/// An alpha-cut [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool operator==(const Interval&) const = default;
};

enum class ArithOp { add, sub, mul, div };

TriangularFuzzy tri_add(const TriangularFuzzy& a, const TriangularFuzzy& b);
TriangularFuzzy tri_sub(const TriangularFuzzy& a, const TriangularFuzzy& b);
TriangularFuzzy tri_mul(const TriangularFuzzy& a, const TriangularFuzzy& b);
TriangularFuzzy tri_div(const TriangularFuzzy& a, const TriangularFuzzy& b);
TriangularFuzzy tri_arith(const TriangularFuzzy& a, const TriangularFuzzy& b, ArithOp op);

TrapezoidalFuzzy trap_arith(const TrapezoidalFuzzy& a, const TrapezoidalFuzzy& b, ArithOp op);

/// Alpha-cut of a triangular number, alpha in (0, 1].
Interval alpha_cut(const TriangularFuzzy& a, double alpha);

/// Dis_{p,q} distance evaluated by composite-trapezoid quadrature over the
/// alpha-cut endpoints. Requires 1 < p, 0 < q < 1, steps >= 2. Serves as the
/// independent numerical route for dis_tri.
double dis_numeric(const TriangularFuzzy& a, const TriangularFuzzy& b, double p, double q, int steps);

/// Closed-form Dis distance (p = 2, q = 1/2) between triangular numbers.
double dis_tri(const TriangularFuzzy& a, const TriangularFuzzy& b);

/// Centroid defuzzification: mean of the three components.
double defuzzify_centroid(const TriangularFuzzy& a);

}  // namespace phyta

#endif
