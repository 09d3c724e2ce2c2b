#include "evoform/trig.hpp"

#include <cmath>

#include "evoform/errors.hpp"

namespace evoform {

namespace {
constexpr double kSeriesCutoff = 1e-8;  // on |c| x^2
}

double sn(double c, double x) {
    const double w = c * x * x;
    if (std::abs(w) < kSeriesCutoff) {
        // x (1 - w/6 + w^2/120 - w^3/5040), truncation < 1e-37
        return x * (1.0 - w / 6.0 * (1.0 - w / 20.0 * (1.0 - w / 42.0)));
    }
    if (c > 0.0) {
        const double r = std::sqrt(c);
        return std::sin(r * x) / r;
    }
    const double r = std::sqrt(-c);
    return std::sinh(r * x) / r;
}

double cn(double c, double x) {
    const double w = c * x * x;
    if (std::abs(w) < kSeriesCutoff) {
        return 1.0 - w / 2.0 * (1.0 - w / 12.0 * (1.0 - w / 30.0));
    }
    if (c > 0.0) {
        return std::cos(std::sqrt(c) * x);
    }
    return std::cosh(std::sqrt(-c) * x);
}

double tanc(double c, double x) {
    const double d = cn(c, x);
    if (d == 0.0) {
        throw DomainError("tanc: pole (cn vanishes)");
    }
    return sn(c, x) / d;
}

double cotc(double c, double x) {
    const double s = sn(c, x);
    if (s == 0.0) {
        throw DomainError("cotc: pole (sn vanishes)");
    }
    return cn(c, x) / s;
}

double arccot(double c, double k) {
    if (c > 0.0) {
        if (!(k > 0.0)) {
            throw DomainError("arccot: need k > 0 for c >= 0");
        }
        const double r = std::sqrt(c);
        // cotc(c, rho) = r cot(r rho); the branch with r rho in (0, pi/2).
        return std::atan(r / k) / r;
    }
    if (c == 0.0) {
        if (!(k > 0.0)) {
            throw DomainError("arccot: need k > 0 for c >= 0");
        }
        return 1.0 / k;
    }
    const double r = std::sqrt(-c);
    if (!(k > r)) {
        throw DomainError("arccot: need k > sqrt(-c) for c < 0");
    }
    // cotc(c, rho) = r coth(r rho)
    return std::atanh(r / k) / r;
}

}  // namespace evoform
