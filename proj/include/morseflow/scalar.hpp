#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace morseflow {

// Scalar ground field of a matrix space: real, complex or quaternion.
enum class Field : std::uint8_t { R, C, H };

inline int field_dim(Field f) {
    switch (f) {
        case Field::R: return 1;
        case Field::C: return 2;
        case Field::H: return 4;
    }
    return 0;
}

inline const char* field_name(Field f) {
    switch (f) {
        case Field::R: return "R";
        case Field::C: return "C";
        case Field::H: return "H";
    }
    return "?";
}

Field parse_field(const std::string& s);

// One matrix entry. Quaternion components (w + x i + y j + z k); real and
// complex entries are the subfields x=y=z=0 and y=z=0, and every operation
// below restricts correctly to them, so a single arithmetic type serves all
// three ground fields.
struct Scalar {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr Scalar() = default;
    constexpr Scalar(double re) : w(re) {}
    constexpr Scalar(double re, double im) : w(re), x(im) {}
    constexpr Scalar(double a, double b, double c, double d) : w(a), x(b), y(c), z(d) {}

    constexpr Scalar operator-() const { return {-w, -x, -y, -z}; }

    constexpr Scalar& operator+=(const Scalar& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Scalar& operator-=(const Scalar& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Scalar& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double abs() const { return std::sqrt(norm_sq()); }

    bool is_real(double tol = 0.0) const {
        return std::abs(x) <= tol && std::abs(y) <= tol && std::abs(z) <= tol;
    }
    bool is_complex(double tol = 0.0) const {
        return std::abs(y) <= tol && std::abs(z) <= tol;
    }
    bool is_finite() const {
        return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline constexpr Scalar conj(const Scalar& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline constexpr Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
inline constexpr Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

// Hamilton product; non-commutative for genuine quaternions.
inline constexpr Scalar operator*(const Scalar& a, const Scalar& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline constexpr Scalar operator*(Scalar a, double s) { return a *= s; }
inline constexpr Scalar operator*(double s, Scalar a) { return a *= s; }
inline constexpr Scalar operator/(const Scalar& a, double s) {
    return {a.w / s, a.x / s, a.y / s, a.z / s};
}

inline Scalar inverse(const Scalar& q) {
    double n = q.norm_sq();
    if (n == 0.0) throw std::domain_error("Scalar::inverse of zero");
    return conj(q) / n;
}

// p^-1 q with a single final rounding per component; division by a real
// quotient keeps exact ratios (q = c p gives exactly c), which matters when
// a flow must pin its fixed points.
inline Scalar left_div(const Scalar& p, const Scalar& q) {
    const double n = p.norm_sq();
    if (n == 0.0) throw std::domain_error("Scalar::left_div by zero");
    return (conj(p) * q) / n;
}

inline bool operator==(const Scalar& a, const Scalar& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
}
inline bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

// Entry fits the field (unused components exactly zero).
inline bool in_field(const Scalar& q, Field f) {
    switch (f) {
        case Field::R: return q.is_real();
        case Field::C: return q.is_complex();
        case Field::H: return true;
    }
    return false;
}

}  // namespace morseflow
