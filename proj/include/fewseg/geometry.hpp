#pragma once

#include <cmath>
#include <cstdint>

#include "fewseg/graph.hpp"

namespace fewseg {

using Wide = __int128;

inline Wide cross(const IVec& a, const IVec& b) { return Wide(a.x) * b.y - Wide(a.y) * b.x; }
inline Wide dot(const IVec& a, const IVec& b) { return Wide(a.x) * b.x + Wide(a.y) * b.y; }
inline double cross(const RVec& a, const RVec& b) { return a.x * b.y - a.y * b.x; }
inline double dot(const RVec& a, const RVec& b) { return a.x * b.x + a.y * b.y; }
inline double norm(const RVec& a) { return std::hypot(a.x, a.y); }

/// Sign of the turn a -> b -> c: +1 left, -1 right, 0 collinear.
int orientation(const IVec& a, const IVec& b, const IVec& c);
int orientation(const RVec& a, const RVec& b, const RVec& c);

/// Divides v by gcd(|x|,|y|), keeping the sign. Throws std::invalid_argument on (0,0).
IVec primitive_vector(const IVec& v);

/// True iff p lies on the closed segment [a,b].
bool on_segment(const IVec& a, const IVec& b, const IVec& p);
bool on_segment(const RVec& a, const RVec& b, const RVec& p);
/// True iff p lies on [a,b] but is neither endpoint.
bool in_segment_interior(const IVec& a, const IVec& b, const IVec& p);
bool in_segment_interior(const RVec& a, const RVec& b, const RVec& p);

/// Closed-segment intersection test (touching counts).
bool segments_intersect(const IVec& a, const IVec& b, const IVec& c, const IVec& d);
bool segments_intersect(const RVec& a, const RVec& b, const RVec& c, const RVec& d);

/// Collinearity of two direction vectors. Integer vectors are tested exactly;
/// real vectors with |a x b| <= eps * |a| * |b|.
inline constexpr double kCollinearEps = 1e-6;
inline bool parallel(const IVec& a, const IVec& b) { return cross(a, b) == 0; }
inline bool parallel(const RVec& a, const RVec& b, double eps = kCollinearEps) {
  return std::abs(cross(a, b)) <= eps * norm(a) * norm(b);
}

template <class T>
struct Box {
  T min_x{}, min_y{}, max_x{}, max_y{};
  T width() const { return max_x - min_x; }
  T height() const { return max_y - min_y; }
};

template <class T, class Range>
Box<T> bounding_box(const Range& pts) {
  Box<T> b;
  bool first = true;
  for (const auto& p : pts) {
    if (first) {
      b = {p.x, p.y, p.x, p.y};
      first = false;
    } else {
      if (p.x < b.min_x) b.min_x = p.x;
      if (p.y < b.min_y) b.min_y = p.y;
      if (p.x > b.max_x) b.max_x = p.x;
      if (p.y > b.max_y) b.max_y = p.y;
    }
  }
  return b;
}

}  // namespace fewseg
