#pragma once

#include <span>

#include "evoform/vec.hpp"

namespace evoform {

// Winding number of a closed polygon (implicit last-to-first edge) about p,
// by accumulated argument increments.  Returns the pre-rounding value in
// *turns when requested; the caller decides whether the residual against the
// nearest integer is acceptable.  Throws DomainError if p lies on a vertex.
int polygonWinding(std::span<const Vec2> polygon, const Vec2& p, double* turns = nullptr);

// Distance from p to the closed polygon's boundary.
double polygonDistance(std::span<const Vec2> polygon, const Vec2& p);

}  // namespace evoform
