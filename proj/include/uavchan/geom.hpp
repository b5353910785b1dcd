// SPDX-License-Identifier: Apache-2.0
//
// uavchan  UAV air-to-ground mmWave channel simulator and sounder toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

namespace uavchan
{

/// Speed of light in vacuum (m/s).
inline constexpr double kSpeedOfLight = 299792458.0;

/// Vacuum permittivity (F/m).
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;

struct Vec2
{
    double x = 0.0;
    double y = 0.0;
};

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

struct Vec3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(Vec3 a)
{
    double n = norm(a);
    return {a.x / n, a.y / n, a.z / n};
}

/// Axis-aligned rectangle on the ground plane, min/max corners in meters.
struct Rect2
{
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

    double width() const { return x1 - x0; }
    double depth() const { return y1 - y0; }
    double area() const { return width() * depth(); }
    bool contains(Vec2 p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
    bool intersects(const Rect2 &o) const
    {
        return x0 < o.x1 && o.x0 < x1 && y0 < o.y1 && o.y0 < y1;
    }
};

/// Axis-aligned box, used for occlusion and foliage penetration tests.
struct Box3
{
    Vec3 min, max;
};

/// Intersection of the parametric segment p + t (q - p), t in [0, 1], with a
/// box. Returns the clipped [t0, t1] interval or nullopt when disjoint.
inline std::optional<std::pair<double, double>> segment_box_interval(Vec3 p, Vec3 q, const Box3 &b)
{
    double t0 = 0.0, t1 = 1.0;
    const double po[3] = {p.x, p.y, p.z};
    const double qo[3] = {q.x, q.y, q.z};
    const double lo[3] = {b.min.x, b.min.y, b.min.z};
    const double hi[3] = {b.max.x, b.max.y, b.max.z};
    for (int i = 0; i < 3; ++i)
    {
        double d = qo[i] - po[i];
        if (std::abs(d) < 1e-12)
        {
            if (po[i] < lo[i] || po[i] > hi[i])
                return std::nullopt;
            continue;
        }
        double inv = 1.0 / d;
        double a = (lo[i] - po[i]) * inv;
        double c = (hi[i] - po[i]) * inv;
        if (a > c)
            std::swap(a, c);
        t0 = std::max(t0, a);
        t1 = std::min(t1, c);
        if (t0 > t1)
            return std::nullopt;
    }
    return std::make_pair(t0, t1);
}

/// Wrap an angle to the half-open interval (-pi, pi].
inline double wrap_phase(double rad)
{
    constexpr double two_pi = 6.283185307179586476925286766559;
    double w = std::remainder(rad, two_pi);
    if (w <= -two_pi / 2.0)
        w += two_pi;
    return w;
}

} // namespace uavchan
