#include "phyta/fuzzy.hpp"

#include <algorithm>
#include <cmath>

namespace phyta {

namespace {

bool support_excludes_zero(double lo, double hi) { return lo > 0.0 || hi < 0.0; }

}  // namespace

TriangularFuzzy::TriangularFuzzy(double a1_, double a2_, double a3_) : a1(a1_), a2(a2_), a3(a3_) {
    if (!(a1 <= a2 && a2 <= a3)) {
        throw ValidationError("triangular components must satisfy a1 <= a2 <= a3");
    }
}

TriangularFuzzy TriangularFuzzy::sorted(double x, double y, double z) {
    std::array<double, 3> v{x, y, z};
    std::sort(v.begin(), v.end());
    return {v[0], v[1], v[2]};
}

TrapezoidalFuzzy::TrapezoidalFuzzy(double a1_, double a2_, double a3_, double a4_)
    : a1(a1_), a2(a2_), a3(a3_), a4(a4_) {
    if (!(a1 <= a2 && a2 <= a3 && a3 <= a4)) {
        throw ValidationError("trapezoidal components must satisfy a1 <= a2 <= a3 <= a4");
    }
}

TrapezoidalFuzzy TrapezoidalFuzzy::sorted(double w, double x, double y, double z) {
    std::array<double, 4> v{w, x, y, z};
    std::sort(v.begin(), v.end());
    return {v[0], v[1], v[2], v[3]};
}

TriangularFuzzy tri_add(const TriangularFuzzy& a, const TriangularFuzzy& b) {
    return {a.a1 + b.a1, a.a2 + b.a2, a.a3 + b.a3};
}

TriangularFuzzy tri_sub(const TriangularFuzzy& a, const TriangularFuzzy& b) {
    return {a.a1 - b.a3, a.a2 - b.a2, a.a3 - b.a1};
}

TriangularFuzzy tri_mul(const TriangularFuzzy& a, const TriangularFuzzy& b) {
    // componentwise product can come out unordered for mixed-sign supports
    return TriangularFuzzy::sorted(a.a1 * b.a1, a.a2 * b.a2, a.a3 * b.a3);
}

TriangularFuzzy tri_div(const TriangularFuzzy& a, const TriangularFuzzy& b) {
    if (!support_excludes_zero(b.a1, b.a3)) {
        throw DivisionBySupportContainingZero("fuzzy division: divisor support contains zero");
    }
    return TriangularFuzzy::sorted(a.a1 / b.a3, a.a2 / b.a2, a.a3 / b.a1);
}

TriangularFuzzy tri_arith(const TriangularFuzzy& a, const TriangularFuzzy& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return tri_add(a, b);
        case ArithOp::sub: return tri_sub(a, b);
        case ArithOp::mul: return tri_mul(a, b);
        case ArithOp::div: return tri_div(a, b);
    }
    throw ParameterOutOfRange("unknown arithmetic op");
}

TrapezoidalFuzzy trap_arith(const TrapezoidalFuzzy& a, const TrapezoidalFuzzy& b, ArithOp op) {
    switch (op) {
        case ArithOp::add:
            return {a.a1 + b.a1, a.a2 + b.a2, a.a3 + b.a3, a.a4 + b.a4};
        case ArithOp::sub:
            return {a.a1 - b.a4, a.a2 - b.a3, a.a3 - b.a2, a.a4 - b.a1};
        case ArithOp::mul:
            return TrapezoidalFuzzy::sorted(a.a1 * b.a1, a.a2 * b.a2, a.a3 * b.a3, a.a4 * b.a4);
        case ArithOp::div:
            if (!support_excludes_zero(b.a1, b.a4)) {
                throw DivisionBySupportContainingZero("fuzzy division: divisor support contains zero");
            }
            return TrapezoidalFuzzy::sorted(a.a1 / b.a4, a.a2 / b.a3, a.a3 / b.a2, a.a4 / b.a1);
    }
    throw ParameterOutOfRange("unknown arithmetic op");
}

Interval alpha_cut(const TriangularFuzzy& a, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw AlphaOutOfRange("alpha must lie in (0, 1]");
    }
    return {a.a1 + alpha * (a.a2 - a.a1), a.a3 - alpha * (a.a3 - a.a2)};
}

double dis_numeric(const TriangularFuzzy& a, const TriangularFuzzy& b, double p, double q, int steps) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw ParameterOutOfRange("dis_numeric: p must satisfy 1 < p < inf");
    }
    if (!(q > 0.0 && q < 1.0)) {
        throw ParameterOutOfRange("dis_numeric: q must lie in (0, 1)");
    }
    if (steps < 2) {
        throw ParameterOutOfRange("dis_numeric: steps must be >= 2");
    }

    const auto lower = [&](double alpha) {
        return std::abs((a.a1 + alpha * (a.a2 - a.a1)) - (b.a1 + alpha * (b.a2 - b.a1)));
    };
    const auto upper = [&](double alpha) {
        return std::abs((a.a3 - alpha * (a.a3 - a.a2)) - (b.a3 - alpha * (b.a3 - b.a2)));
    };

    const double h = 1.0 / steps;
    double ilo = 0.5 * (std::pow(lower(0.0), p) + std::pow(lower(1.0), p));
    double ihi = 0.5 * (std::pow(upper(0.0), p) + std::pow(upper(1.0), p));
    for (int k = 1; k < steps; ++k) {
        const double alpha = k * h;
        ilo += std::pow(lower(alpha), p);
        ihi += std::pow(upper(alpha), p);
    }
    ilo *= h;
    ihi *= h;
    return std::pow((1.0 - q) * ilo + q * ihi, 1.0 / p);
}

double dis_tri(const TriangularFuzzy& a, const TriangularFuzzy& b) {
    const double d1 = b.a1 - a.a1;
    const double d2 = b.a2 - a.a2;
    const double d3 = b.a3 - a.a3;
    const double s = d1 * d1 + d2 * d2 + d3 * d3 + d2 * d2 + d1 * d2 + d2 * d3;
    return std::sqrt(std::max(s, 0.0) / 6.0);
}

double defuzzify_centroid(const TriangularFuzzy& a) { return (a.a1 + a.a2 + a.a3) / 3.0; }

}  // namespace phyta
