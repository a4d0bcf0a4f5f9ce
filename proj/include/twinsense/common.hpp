// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace twinsense
{

using cd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kSpeedOfLight = 299792458.0;

// Error families map onto CLI exit codes (2, 3, 4).
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Raised for scenes that fail validate_scene.
class ValidationError : public ConfigError
{
  public:
    using ConfigError::ConfigError;
};

struct Vec2
{
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2 &o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2 &o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2 &) const = default;
};

inline double dot(const Vec2 &a, const Vec2 &b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2 &a, const Vec2 &b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2 &a) { return std::hypot(a.x, a.y); }

struct Vec3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec2 xy() const { return {x, y}; }
    bool operator==(const Vec3 &) const = default;
};

// Wraps an angle into [0, 2*pi).
inline double wrap_angle(double a)
{
    double w = std::fmod(a, kTwoPi);
    if (w < 0.0)
        w += kTwoPi;
    if (w >= kTwoPi)
        w = 0.0;
    return w;
}

} // namespace twinsense
