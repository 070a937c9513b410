#pragma once

#include "mdt/point.hpp"

namespace mdt {

// Sign of the cross product (b-a) x (c-a): +1 for a left turn (counter-
// clockwise), -1 for a right turn, 0 for collinear. Exact: a double
// interval filter falls back to rational arithmetic when inconclusive.
int orientation(const Point& a, const Point& b, const Point& c);

// Sign of the incircle determinant: for a counterclockwise triangle abc,
// +1 means d lies strictly inside the circumcircle, -1 strictly outside,
// 0 cocircular. Exact.
int in_circle(const Point& a, const Point& b, const Point& c, const Point& d);

// in_circle with cocircular ties broken by a symbolic perturbation of the
// lifted coordinates, ordered by point id (smaller id = larger
// perturbation). Never returns 0 unless all four points are collinear,
// which callers must rule out. Ids must be pairwise distinct.
int in_circle_perturbed(const Point& a, int ia, const Point& b, int ib,
                        const Point& c, int ic, const Point& d, int id);

// True iff the open segments ab and cd intersect in a single point
// interior to both. Shared endpoints, endpoint-on-interior contacts and
// collinear overlaps all return false.
bool segments_cross(const Point& a, const Point& b, const Point& c,
                    const Point& d);

// True iff p lies strictly inside the open segment ab.
bool point_on_segment(const Point& p, const Point& a, const Point& b);

}  // namespace mdt
