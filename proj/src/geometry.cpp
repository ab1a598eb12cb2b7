#include "fewseg/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fewseg {

namespace {

template <class T>
int sign_of(T v) {
  return (v > T(0)) - (v < T(0));
}

template <class V>
bool within_box(const V& a, const V& b, const V& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

template <class V>
bool intersect_impl(const V& a, const V& b, const V& c, const V& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && within_box(a, b, c)) return true;
  if (o2 == 0 && within_box(a, b, d)) return true;
  if (o3 == 0 && within_box(c, d, a)) return true;
  if (o4 == 0 && within_box(c, d, b)) return true;
  return false;
}

}  // namespace

int orientation(const IVec& a, const IVec& b, const IVec& c) { return sign_of(cross(b - a, c - a)); }

int orientation(const RVec& a, const RVec& b, const RVec& c) { return sign_of(cross(b - a, c - a)); }

IVec primitive_vector(const IVec& v) {
  if (v.x == 0 && v.y == 0) throw std::invalid_argument("primitive_vector: zero vector");
  const std::int64_t g = std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
  return {v.x / g, v.y / g};
}

bool on_segment(const IVec& a, const IVec& b, const IVec& p) {
  return orientation(a, b, p) == 0 && within_box(a, b, p);
}

bool on_segment(const RVec& a, const RVec& b, const RVec& p) {
  return orientation(a, b, p) == 0 && within_box(a, b, p);
}

bool in_segment_interior(const IVec& a, const IVec& b, const IVec& p) {
  return p != a && p != b && on_segment(a, b, p);
}

bool in_segment_interior(const RVec& a, const RVec& b, const RVec& p) {
  return p != a && p != b && on_segment(a, b, p);
}

bool segments_intersect(const IVec& a, const IVec& b, const IVec& c, const IVec& d) {
  return intersect_impl(a, b, c, d);
}

bool segments_intersect(const RVec& a, const RVec& b, const RVec& c, const RVec& d) {
  return intersect_impl(a, b, c, d);
}

}  // namespace fewseg
