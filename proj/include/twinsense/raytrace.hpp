// SPDX-License-Identifier: Apache-2.0
//
// Image-method ray tracer over 2.5D building footprints. Buildings are
// extruded to unbounded height, so visibility and reflection geometry are
// solved in the X-Y plane and path lengths are lifted to 3D afterwards.

#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "twinsense/common.hpp"
#include "twinsense/scene.hpp"

namespace twinsense::rt
{

struct RayConfig
{
    double carrier_hz = 3.5e9;
    int max_order = 4;
    cd reflection_coeff{-0.6, 0.0};
    std::size_t max_paths = 25;

    double wavelength() const { return kSpeedOfLight / carrier_hz; }
    // Throws ConfigError on invariant violations.
    void validate() const;
};

struct PropagationPath
{
    cd gain;
    double aod_rad = 0.0;
    double aoa_rad = 0.0;
    double length_m = 0.0;
    int order = 0;
    // Wall ids in bounce order and the matching reflection points.
    std::vector<int> walls;
    std::vector<Vec2> reflection_points;
};

struct Segment3
{
    Vec3 a;
    Vec3 b;
};

// One building edge, oriented so that `normal` points out of the building.
struct Wall
{
    Vec2 a;
    Vec2 b;
    Vec2 normal;
    int building = 0;
    int edge = 0;
};

// Walls are numbered building by building, edge by edge (input vertex order).
std::vector<Wall> extract_walls(const scene::Scene &scene);

Vec2 mirror_point(Vec2 p, Vec2 wall_a, Vec2 wall_b);

bool path_blocked(const Segment3 &seg, const scene::Scene &scene, const std::vector<int> &ignore_walls);

double foliage_length(const Segment3 &seg, const scene::Scene &scene);
// Sum over foliage polygons of (attenuation * traversed length), in dB.
double foliage_loss_db(const Segment3 &seg, const scene::Scene &scene);

cd path_gain(double length_m, int order, double foliage_m, double atten_db_per_m, const RayConfig &cfg);
cd path_gain_db(double length_m, int order, double foliage_loss_db, const RayConfig &cfg);

// Per-scene tracer. Construction precomputes the wall list, the wall-to-wall
// visibility matrix and the tree of base-station images, all of which depend
// only on the scene; trace() is const and safe to call concurrently.
class RayTracer
{
  public:
    RayTracer(const scene::Scene &scene, RayConfig cfg);

    std::vector<PropagationPath> trace(const Vec3 &user) const;

    const std::vector<Wall> &walls() const { return walls_; }
    bool walls_visible(int from, int to) const { return visible_[from * walls_.size() + to] != 0; }
    std::size_t image_count() const { return nodes_.size() - 1; }
    // Segment test in the X-Y plane, skipping up to two wall ids.
    bool blocked(Vec2 p, Vec2 q, int ignore_a = -1, int ignore_b = -1) const;

  private:
    struct ImageNode
    {
        int wall = -1;
        int parent = -1;
        int depth = 0;
        Vec2 image;
    };

    struct Box
    {
        double x0, y0, x1, y1;
    };

    double foliage_db(Vec2 p, Vec2 q) const;

    scene::Scene scene_;
    RayConfig cfg_;
    std::vector<Wall> walls_;
    std::vector<Box> building_boxes_;
    std::vector<std::pair<int, int>> building_walls_; // [first, last) wall ids
    std::vector<char> visible_;
    std::vector<ImageNode> nodes_;
};

std::vector<PropagationPath> trace_paths(const scene::Scene &scene, const Vec3 &user, const RayConfig &cfg);

// Debug dump: {"user":[x,y,z],"paths":[{"gain":[re,im],"aod":f,"aoa":f,"len":f,"order":n}]}
nlohmann::json paths_to_json(const Vec3 &user, const std::vector<PropagationPath> &paths);

} // namespace twinsense::rt
