#pragma once

#include <Eigen/Dense>

namespace ng {

struct SecondClassSolution;
struct LinearStage;

// Minimal double-double value for compensated residual evaluation.
struct dd {
    double hi = 0, lo = 0;
    dd() = default;
    dd(double x) : hi(x), lo(0) {}
    dd(double h, double l) : hi(h), lo(l) {}
    double to_double() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return dd(s, err);
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return dd(p, err);
}

inline dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    dd r = two_sum(s.hi, lo);
    return r;
}

inline dd dd_sub(dd a, dd b) { return dd_add(a, dd(-b.hi, -b.lo)); }

inline dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
    return two_sum(p.hi, lo);
}

// Two Newton iterations on the square norm subsystem with the residual
// evaluated in double-double; tightens the last bits of the stored doubles.
void dd_polish_norms(SecondClassSolution& sol, const LinearStage& space);

} // namespace ng
