// SPDX-License-Identifier: Apache-2.0
//
// Environment model: building footprints, foliage regions, base station and
// the discretized user grid, plus digital-twin perturbation.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twinsense/common.hpp"

namespace twinsense::scene
{

using Polygon = std::vector<Vec2>;

struct Building
{
    Polygon vertices;

    bool operator==(const Building &) const = default;
};

struct Foliage
{
    Polygon vertices;
    double atten_db_per_m = 1.0;

    bool operator==(const Foliage &) const = default;
};

struct BaseStation
{
    Vec3 pos;
    // Azimuth of the array reference axis; array-frame angle = azimuth - boresight_rad.
    double boresight_rad = 0.0;

    bool operator==(const BaseStation &) const = default;
};

struct UserGrid
{
    Vec2 origin;
    double width = 0.0;
    double height = 0.0;
    double spacing = 1.0;
    double user_height = 2.0;

    bool operator==(const UserGrid &) const = default;
};

struct Scene
{
    std::string name;
    BaseStation bs;
    UserGrid grid;
    std::vector<Building> buildings;
    std::vector<Foliage> foliage;

    bool operator==(const Scene &) const = default;
};

struct PerturbationSpec
{
    double building_error_m = 0.0;
    bool drop_foliage = false;
    std::uint64_t seed = 0;
};

// Polygon helpers shared with the ray tracer.
double signed_area(const Polygon &poly);
Vec2 centroid(const Polygon &poly);
// True when p lies inside the polygon and farther than `eps` from its boundary.
bool strictly_inside(const Polygon &poly, Vec2 p, double eps = 1e-9);
bool is_simple(const Polygon &poly);

std::vector<std::string> validate_scene(const Scene &scene);
// Throws ValidationError listing every violation.
void require_valid(const Scene &scene);

Scene perturb_scene(const Scene &scene, const PerturbationSpec &spec);

std::vector<Vec3> generate_user_grid(const Scene &scene);

Scene scene_from_json(const nlohmann::json &j);
nlohmann::json scene_to_json(const Scene &scene);
Scene load_scene(const std::filesystem::path &path);
void save_scene(const Scene &scene, const std::filesystem::path &path);
// Stable 64-bit hash of the canonical JSON form, as 16 hex digits.
std::string scene_hash(const Scene &scene);

} // namespace twinsense::scene
