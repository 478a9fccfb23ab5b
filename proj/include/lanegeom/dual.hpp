#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace lanegeom {

// Forward-mode scalar: value plus N partial derivatives. Loss kernels are
// templated on the scalar type, so instantiating them with Dual<N> yields
// exact gradients without a separate derivative code path.
template <std::size_t N>
struct Dual {
    double v = 0.0;
    std::array<double, N> d{};

    Dual() = default;
    explicit Dual(double value) : v(value) {}
    Dual(double value, std::size_t seed_index) : v(value) { d[seed_index] = 1.0; }
};

template <std::size_t N> inline double value_of(const Dual<N>& x) { return x.v; }

template <std::size_t N>
inline Dual<N> operator+(Dual<N> a, Dual<N> b) {
    Dual<N> r(a.v + b.v);
    for (std::size_t i = 0; i < N; ++i) r.d[i] = a.d[i] + b.d[i];
    return r;
}

template <std::size_t N>
inline Dual<N> operator-(Dual<N> a, Dual<N> b) {
    Dual<N> r(a.v - b.v);
    for (std::size_t i = 0; i < N; ++i) r.d[i] = a.d[i] - b.d[i];
    return r;
}

template <std::size_t N>
inline Dual<N> operator-(Dual<N> a) {
    Dual<N> r(-a.v);
    for (std::size_t i = 0; i < N; ++i) r.d[i] = -a.d[i];
    return r;
}

template <std::size_t N>
inline Dual<N> operator*(Dual<N> a, Dual<N> b) {
    Dual<N> r(a.v * b.v);
    for (std::size_t i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
    return r;
}

template <std::size_t N>
inline Dual<N> operator/(Dual<N> a, Dual<N> b) {
    Dual<N> r(a.v / b.v);
    double ib2 = 1.0 / (b.v * b.v);
    for (std::size_t i = 0; i < N; ++i) r.d[i] = (a.d[i] * b.v - a.v * b.d[i]) * ib2;
    return r;
}

template <std::size_t N> inline Dual<N> operator+(Dual<N> a, double b) { a.v += b; return a; }
template <std::size_t N> inline Dual<N> operator+(double a, Dual<N> b) { b.v += a; return b; }
template <std::size_t N> inline Dual<N> operator-(Dual<N> a, double b) { a.v -= b; return a; }
template <std::size_t N> inline Dual<N> operator-(double a, Dual<N> b) { return Dual<N>(a) - b; }

template <std::size_t N>
inline Dual<N> operator*(Dual<N> a, double b) {
    a.v *= b;
    for (std::size_t i = 0; i < N; ++i) a.d[i] *= b;
    return a;
}
template <std::size_t N> inline Dual<N> operator*(double a, Dual<N> b) { return b * a; }
template <std::size_t N> inline Dual<N> operator/(Dual<N> a, double b) { return a * (1.0 / b); }
template <std::size_t N> inline Dual<N> operator/(double a, Dual<N> b) { return Dual<N>(a) / b; }

template <std::size_t N> inline Dual<N>& operator+=(Dual<N>& a, Dual<N> b) { a = a + b; return a; }
template <std::size_t N> inline Dual<N>& operator-=(Dual<N>& a, Dual<N> b) { a = a - b; return a; }

template <std::size_t N>
inline Dual<N> sqrt(Dual<N> a) {
    Dual<N> r(std::sqrt(a.v));
    double k = 0.5 / r.v;
    for (std::size_t i = 0; i < N; ++i) r.d[i] = k * a.d[i];
    return r;
}

template <std::size_t N>
inline Dual<N> exp(Dual<N> a) {
    Dual<N> r(std::exp(a.v));
    for (std::size_t i = 0; i < N; ++i) r.d[i] = r.v * a.d[i];
    return r;
}

template <std::size_t N>
inline Dual<N> log(Dual<N> a) {
    Dual<N> r(std::log(a.v));
    double k = 1.0 / a.v;
    for (std::size_t i = 0; i < N; ++i) r.d[i] = k * a.d[i];
    return r;
}

template <std::size_t N>
inline Dual<N> sin(Dual<N> a) {
    Dual<N> r(std::sin(a.v));
    double k = std::cos(a.v);
    for (std::size_t i = 0; i < N; ++i) r.d[i] = k * a.d[i];
    return r;
}

template <std::size_t N>
inline Dual<N> cos(Dual<N> a) {
    Dual<N> r(std::cos(a.v));
    double k = -std::sin(a.v);
    for (std::size_t i = 0; i < N; ++i) r.d[i] = k * a.d[i];
    return r;
}

}  // namespace lanegeom
