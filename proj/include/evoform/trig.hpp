#pragma once

namespace evoform {

// Curvature-parametrized trigonometry, one family covering the sphere (c > 0),
// the plane (c = 0) and the hyperbolic plane (c < 0):
//
//   sn(c, x) = sin(sqrt(c) x)/sqrt(c) | x | sinh(sqrt(-c) x)/sqrt(-c)
//   cn(c, x) = cos(sqrt(c) x)         | 1 | cosh(sqrt(-c) x)
//
// with sn' = cn, cn' = -c sn and cn^2 + c sn^2 = 1.  A Taylor branch keeps
// full precision through c -> 0 (the naive form loses digits when |c| x^2 is
// tiny).

double sn(double c, double x);
double cn(double c, double x);
double tanc(double c, double x);

// cn/sn; throws DomainError at the poles (sn(c, x) = 0).
double cotc(double c, double x);

// Inverse of cotc on the strongly convex range: the unique rho > 0 with
// cotc(c, rho) = k, and sqrt(c) rho < pi/2 when c > 0.  Requires k > 0 for
// c >= 0 and k > sqrt(-c) for c < 0; throws DomainError otherwise.
double arccot(double c, double k);

}  // namespace evoform
