#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lanegeom {

// Small fixed-size vector/matrix types, templated on the scalar so the same
// loss kernels run on plain doubles and on forward-mode dual numbers.

template <class T>
struct Vec2T {
    T x{};
    T y{};
};

template <class T>
struct Vec3T {
    T x{};
    T y{};
    T z{};
};

// Row-major 2x2: [[a, b], [c, d]].
template <class T>
struct Mat2T {
    T a{};
    T b{};
    T c{};
    T d{};
};

using Vec2 = Vec2T<double>;
using Vec3 = Vec3T<double>;
using Mat2 = Mat2T<double>;

// Ordered 3D point sequence; >= 2 points, consecutive points distinct.
using Polyline3 = std::vector<Vec3>;

template <class T> inline Vec2T<T> operator+(Vec2T<T> u, Vec2T<T> v) { return {u.x + v.x, u.y + v.y}; }
template <class T> inline Vec2T<T> operator-(Vec2T<T> u, Vec2T<T> v) { return {u.x - v.x, u.y - v.y}; }
template <class T, class S> inline Vec2T<T> operator*(S s, Vec2T<T> v) { return {s * v.x, s * v.y}; }
template <class T> inline Vec3T<T> operator+(Vec3T<T> u, Vec3T<T> v) { return {u.x + v.x, u.y + v.y, u.z + v.z}; }
template <class T> inline Vec3T<T> operator-(Vec3T<T> u, Vec3T<T> v) { return {u.x - v.x, u.y - v.y, u.z - v.z}; }
template <class T, class S> inline Vec3T<T> operator*(S s, Vec3T<T> v) { return {s * v.x, s * v.y, s * v.z}; }

template <class T> inline T dot(Vec2T<T> u, Vec2T<T> v) { return u.x * v.x + u.y * v.y; }
template <class T> inline T dot(Vec3T<T> u, Vec3T<T> v) { return u.x * v.x + u.y * v.y + u.z * v.z; }
template <class T> inline T cross2(Vec2T<T> u, Vec2T<T> v) { return u.x * v.y - u.y * v.x; }

inline double value_of(double x) { return x; }

// Euclidean norm with the zero-subgradient convention: at exactly zero the
// derivative is defined as 0 instead of NaN from sqrt'(0).
template <class T>
inline T norm(Vec3T<T> v) {
    using std::sqrt;
    T s = dot(v, v);
    if (value_of(s) == 0.0) return T(0);
    return sqrt(s);
}

template <class T>
inline T norm(Vec2T<T> v) {
    using std::sqrt;
    T s = dot(v, v);
    if (value_of(s) == 0.0) return T(0);
    return sqrt(s);
}

template <class T> inline Mat2T<T> operator+(Mat2T<T> m, Mat2T<T> n) { return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d}; }
template <class T> inline Mat2T<T> operator-(Mat2T<T> m, Mat2T<T> n) { return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d}; }

template <class T>
inline Mat2T<T> matmul(Mat2T<T> m, Mat2T<T> n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

template <class T> inline Vec2T<T> matvec(Mat2T<T> m, Vec2T<T> v) { return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y}; }
template <class T> inline Mat2T<T> transpose(Mat2T<T> m) { return {m.a, m.c, m.b, m.d}; }
template <class T> inline T det(Mat2T<T> m) { return m.a * m.d - m.b * m.c; }
template <class T> inline T trace(Mat2T<T> m) { return m.a + m.d; }

template <class T>
inline Mat2T<T> inverse(Mat2T<T> m) {
    T dt = det(m);
    T inv = T(1) / dt;
    return {inv * m.d, T(-1) * inv * m.b, T(-1) * inv * m.c, inv * m.a};
}

// Counterclockwise rotation [[cos, -sin], [sin, cos]].
template <class T>
inline Mat2T<T> rotation2(T angle) {
    using std::cos;
    using std::sin;
    T c = cos(angle);
    T s = sin(angle);
    return {c, T(-1) * s, s, c};
}

inline Vec2 xy(Vec3 p) { return {p.x, p.y}; }

inline bool is_finite(Vec3 p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

// Throws std::invalid_argument unless p has >= min_points points, finite
// coordinates, and pairwise-distinct consecutive points.
void validate_polyline(const Polyline3& p, std::size_t min_points = 2);

double polyline_length(const Polyline3& p);
double polyline_length_2d(const Polyline3& p);

// 3D point at arc-length position s (clamped to [0, total length]).
Vec3 point_at_arc(const Polyline3& p, double s);

double point_segment_distance_2d(Vec2 p, Vec2 a, Vec2 b);
double point_segment_distance_3d(Vec3 p, Vec3 a, Vec3 b);

// Minimum 2D distance from p to any segment of the polyline.
double point_polyline_distance_2d(Vec2 p, const Polyline3& line);
double point_polyline_distance_3d(Vec3 p, const Polyline3& line);

}  // namespace lanegeom
