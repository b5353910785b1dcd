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

#include "uavchan/scene.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "uavchan/errors.hpp"
#include "uavchan/rng.hpp"

namespace uavchan
{

namespace
{

constexpr double kFlightLineY = kTxGround.y + kTrajLateralOffset; // 5020
constexpr double kClearHalfWidth = 20.0; // no objects within this strip around the flight line
constexpr double kObjectGap = 4.0;       // minimum spacing between footprints

struct Corridor
{
    double x0 = kTxGround.x;
    double x1 = kTxGround.x + kCorridorLength;
    double y0 = kFlightLineY - kCorridorHalfWidth;
    double y1 = kFlightLineY + kCorridorHalfWidth;
};

bool placement_ok(const Rect2 &r, const std::vector<Rect2> &placed)
{
    const Corridor c;
    if (r.x0 < c.x0 || r.x1 > c.x1 || r.y0 < c.y0 || r.y1 > c.y1)
        return false;
    // keep the flight line and the transmitter clear
    Rect2 strip{c.x0 - 100.0, kFlightLineY - kClearHalfWidth, c.x1 + 100.0,
                kFlightLineY + kClearHalfWidth};
    if (r.intersects(strip))
        return false;
    Rect2 tx_pad{kTxGround.x - 12.0, kTxGround.y - 12.0, kTxGround.x + 12.0, kTxGround.y + 12.0};
    if (r.intersects(tx_pad))
        return false;
    Rect2 grown{r.x0 - kObjectGap, r.y0 - kObjectGap, r.x1 + kObjectGap, r.y1 + kObjectGap};
    for (const auto &p : placed)
        if (grown.intersects(p))
            return false;
    return true;
}

// Draw a footprint around a nominal (cx, cy) slot, re-jittering on conflict.
// Draw order (dims, x jitter, y jitter) is part of the deterministic layout.
Rect2 place_slot(SplitMix64 &rng, std::vector<Rect2> &placed, double cx, double cy,
                 double jx, double jy, double wlo, double whi, std::uint64_t seed)
{
    for (int attempt = 0; attempt < 64; ++attempt)
    {
        double w = rng.uniform(wlo, whi);
        double d = rng.uniform(wlo, whi);
        double x = cx + rng.uniform(-jx, jx);
        double y = cy + rng.uniform(-jy, jy);
        Rect2 r{x - w / 2.0, y - d / 2.0, x + w / 2.0, y + d / 2.0};
        if (placement_ok(r, placed))
        {
            placed.push_back(r);
            return r;
        }
    }
    throw SceneGenerationError("object placement failed after bounded retries (seed " +
                               std::to_string(seed) + ")");
}

} // namespace

const char *scenario_name(ScenarioKind kind)
{
    switch (kind)
    {
    case ScenarioKind::OverSea:
        return "oversea";
    case ScenarioKind::Rural:
        return "rural";
    case ScenarioKind::Suburban:
        return "suburban";
    case ScenarioKind::Urban:
        return "urban";
    }
    return "unknown";
}

ScenarioKind scenario_from_name(const std::string &name)
{
    if (name == "oversea")
        return ScenarioKind::OverSea;
    if (name == "rural")
        return ScenarioKind::Rural;
    if (name == "suburban")
        return ScenarioKind::Suburban;
    if (name == "urban")
        return ScenarioKind::Urban;
    throw ConfigError("unknown scenario name: " + name);
}

Scene generate_scenario(ScenarioKind kind, std::uint64_t seed)
{
    Scene scene;
    scene.seed = seed;
    scene.kind = kind;
    SplitMix64 rng(seed + 0x632BE59BD9B4E019ULL * (static_cast<std::uint64_t>(kind) + 1));

    std::vector<Rect2> placed;
    auto add_building = [&](double cx, double cy, double jx, double jy, double wlo, double whi,
                            double hlo, double hhi) {
        Rect2 r = place_slot(rng, placed, cx, cy, jx, jy, wlo, whi, seed);
        scene.buildings.push_back({r, rng.uniform(hlo, hhi), MaterialKind::Concrete});
    };
    auto add_foliage = [&](double cx, double cy, double jx, double jy) {
        Rect2 r = place_slot(rng, placed, cx, cy, jx, jy, 10.0, 40.0, seed);
        scene.foliage.push_back({r, rng.uniform(4.0, 10.0)});
    };

    switch (kind)
    {
    case ScenarioKind::OverSea:
    {
        scene.ground = MaterialKind::SeaWater;
        // Two metallic ships flanking the flight line; sizes and anchorages
        // are placeholders with mild seed jitter.
        for (int s = 0; s < 2; ++s)
        {
            double side = (s == 0) ? -1.0 : 1.0;
            double len = rng.uniform(90.0, 140.0);
            double wid = rng.uniform(18.0, 30.0);
            double cx = (s == 0 ? 4500.0 : 5100.0) + rng.uniform(0.0, 400.0);
            double cy = kFlightLineY + side * (90.0 + rng.uniform(0.0, 120.0));
            Rect2 r{cx - len / 2.0, cy - wid / 2.0, cx + len / 2.0, cy + wid / 2.0};
            double h = rng.uniform(15.0, 25.0);
            scene.ships.push_back({r, h, MaterialKind::PerfectConductor});
            placed.push_back(r);
        }
        break;
    }
    case ScenarioKind::Rural:
    {
        // A short village street near the ground station: two rows of five.
        for (int s = 0; s < 2; ++s)
        {
            double side = (s == 0) ? 1.0 : -1.0;
            for (int k = 0; k < 5; ++k)
            {
                double cy = kFlightLineY + side * (62.0 + rng.uniform(0.0, 18.0));
                add_building(4090.0 + 110.0 * k, cy, 20.0, 0.0, 8.0, 20.0, 4.0, 8.0);
            }
        }
        for (int k = 0; k < 5; ++k)
        {
            double side = (k % 2 == 0) ? 1.0 : -1.0;
            double cy = kFlightLineY + side * (115.0 + rng.uniform(0.0, 40.0));
            add_foliage(4100.0 + 150.0 * k, cy, 25.0, 0.0);
        }
        break;
    }
    case ScenarioKind::Suburban:
    {
        // Village rows near the transmitter plus scattered houses further out.
        for (int s = 0; s < 2; ++s)
        {
            double side = (s == 0) ? 1.0 : -1.0;
            for (int k = 0; k < 7; ++k)
            {
                double cy = kFlightLineY + side * (58.0 + rng.uniform(0.0, 20.0));
                add_building(4080.0 + 105.0 * k, cy, 18.0, 0.0, 8.0, 20.0, 4.0, 30.0);
            }
        }
        for (int k = 0; k < 6; ++k)
        {
            double side = (k % 2 == 0) ? 1.0 : -1.0;
            double cx = rng.uniform(4900.0, 5950.0);
            double cy = kFlightLineY + side * rng.uniform(60.0, 420.0);
            add_building(cx, cy, 0.0, 0.0, 8.0, 20.0, 4.0, 30.0);
        }
        for (int k = 0; k < 8; ++k)
        {
            double side = (k % 2 == 0) ? 1.0 : -1.0;
            double cy = kFlightLineY + side * (110.0 + rng.uniform(0.0, 60.0));
            add_foliage(4120.0 + 165.0 * k, cy, 30.0, 0.0);
        }
        break;
    }
    case ScenarioKind::Urban:
    {
        // City grid: four street rows per side of the flight line. Rows 0-1
        // hold 13 towers, rows 2-3 hold 12, for 100 in total.
        for (int j = 0; j < 4; ++j)
        {
            int per_row = (j < 2) ? 13 : 12;
            for (int s = 0; s < 2; ++s)
            {
                double side = (s == 0) ? 1.0 : -1.0;
                for (int k = 0; k < per_row; ++k)
                {
                    double cy = kFlightLineY + side * (72.0 + 110.0 * j + rng.uniform(-12.0, 12.0));
                    add_building(4075.0 + 152.0 * k, cy, 22.0, 0.0, 10.0, 40.0, 70.0, 180.0);
                }
            }
        }
        break;
    }
    }
    validate_scene(scene);
    return scene;
}

TrajectorySpec default_trajectory(double height_m, double length_m, double spacing_m,
                                  double speed_mps)
{
    TrajectorySpec spec;
    spec.start = {kTxGround.x + kTrajStartOffset, kFlightLineY, height_m};
    spec.heading = {1.0, 0.0};
    spec.length = length_m;
    spec.height = height_m;
    spec.speed = speed_mps;
    spec.spacing = spacing_m;
    return spec;
}

std::vector<Vec3> trajectory_samples(const TrajectorySpec &spec)
{
    if (!(spec.spacing > 0.0))
        throw ConfigError("trajectory spacing must be positive");
    if (!(spec.length >= 0.0))
        throw ConfigError("trajectory length must be non-negative");
    if (!(spec.height >= 0.0))
        throw ConfigError("trajectory height must be non-negative");
    double hn = norm(spec.heading);
    if (!(hn > 0.0))
        throw ConfigError("trajectory heading must be non-zero");
    Vec2 dir{spec.heading.x / hn, spec.heading.y / hn};

    auto count = static_cast<std::size_t>(std::floor(spec.length / spec.spacing + 1e-9)) + 1;
    std::vector<Vec3> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
    {
        double s = static_cast<double>(i) * spec.spacing;
        out.push_back({spec.start.x + s * dir.x, spec.start.y + s * dir.y, spec.height});
    }
    return out;
}

void validate_scene(const Scene &scene)
{
    auto fail = [&](const std::string &msg) {
        throw SceneGenerationError(msg + " (seed " + std::to_string(scene.seed) + ")");
    };
    if (!(scene.width > 0.0 && scene.depth > 0.0))
        fail("terrain extent must be positive");

    auto check_box = [&](const Rect2 &r, double h, const char *what) {
        if (!(h > 0.0))
            fail(std::string(what) + " height must be positive");
        if (!(r.area() > 0.0))
            fail(std::string(what) + " footprint is degenerate");
        if (r.x0 < 0.0 || r.y0 < 0.0 || r.x1 > scene.width || r.y1 > scene.depth)
            fail(std::string(what) + " footprint outside terrain");
    };

    std::vector<Rect2> solids;
    for (const auto &b : scene.buildings)
    {
        check_box(b.footprint, b.height, "building");
        solids.push_back(b.footprint);
    }
    for (const auto &s : scene.ships)
    {
        check_box(s.footprint, s.height, "ship");
        solids.push_back(s.footprint);
    }
    for (const auto &f : scene.foliage)
        check_box(f.footprint, f.height, "foliage");

    for (std::size_t i = 0; i < solids.size(); ++i)
        for (std::size_t j = i + 1; j < solids.size(); ++j)
            if (solids[i].intersects(solids[j]))
                fail("overlapping footprints");

    if (scene.kind == ScenarioKind::OverSea)
    {
        if (scene.ground != MaterialKind::SeaWater || !scene.buildings.empty() ||
            scene.ships.size() != 2)
            fail("over-sea scene must be sea water with exactly two ships");
    }
}

// --- text format ----------------------------------------------------------

namespace
{

std::string fmt(double v)
{
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string &tok, int line)
{
    const char *b = tok.c_str();
    char *end = nullptr;
    double v = std::strtod(b, &end);
    if (end != b + tok.size() || tok.empty())
        throw ConfigError("bad number '" + tok + "'", line);
    return v;
}

std::vector<std::string> split_ws(const std::string &line)
{
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok)
        out.push_back(tok);
    return out;
}

} // namespace

std::string scene_to_text(const Scene &scene)
{
    std::string out;
    out += "scene v1 ";
    out += scene.kind ? scenario_name(*scene.kind) : "custom";
    out += ' ';
    out += std::to_string(scene.seed);
    out += '\n';
    out += "terrain " + fmt(scene.width) + ' ' + fmt(scene.depth) + ' ' +
           material_name(scene.ground) + '\n';
    auto box_line = [&](const char *tag, const Rect2 &r, double h) {
        return std::string(tag) + ' ' + fmt(r.x0) + ' ' + fmt(r.y0) + ' ' + fmt(r.x1) + ' ' +
               fmt(r.y1) + ' ' + fmt(h);
    };
    for (const auto &b : scene.buildings)
        out += box_line("building", b.footprint, b.height) + ' ' + material_name(b.material) + '\n';
    for (const auto &f : scene.foliage)
        out += box_line("foliage", f.footprint, f.height) + '\n';
    for (const auto &s : scene.ships)
        out += box_line("ship", s.footprint, s.height) + ' ' + material_name(s.material) + '\n';
    return out;
}

Scene scene_from_text(const std::string &text)
{
    Scene scene;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool saw_header = false, saw_terrain = false;
    while (std::getline(is, line))
    {
        ++lineno;
        if (line.empty())
            continue;
        auto tok = split_ws(line);
        if (!saw_header)
        {
            if (tok.size() != 4 || tok[0] != "scene" || tok[1] != "v1")
                throw ConfigError("expected 'scene v1 <kind> <seed>' header", lineno);
            if (tok[2] != "custom")
                scene.kind = scenario_from_name(tok[2]);
            scene.seed = std::strtoull(tok[3].c_str(), nullptr, 10);
            saw_header = true;
            continue;
        }
        if (tok[0] == "terrain")
        {
            if (tok.size() != 4)
                throw ConfigError("terrain line needs width, depth, ground material", lineno);
            scene.width = parse_double(tok[1], lineno);
            scene.depth = parse_double(tok[2], lineno);
            scene.ground = material_from_name(tok[3]);
            saw_terrain = true;
        }
        else if (tok[0] == "building" || tok[0] == "ship")
        {
            if (tok.size() != 7)
                throw ConfigError(tok[0] + " line needs x0 y0 x1 y1 h material", lineno);
            Building b;
            b.footprint = {parse_double(tok[1], lineno), parse_double(tok[2], lineno),
                           parse_double(tok[3], lineno), parse_double(tok[4], lineno)};
            b.height = parse_double(tok[5], lineno);
            b.material = material_from_name(tok[6]);
            (tok[0] == "building" ? scene.buildings : scene.ships).push_back(b);
        }
        else if (tok[0] == "foliage")
        {
            if (tok.size() != 6)
                throw ConfigError("foliage line needs x0 y0 x1 y1 h", lineno);
            FoliageBlock f;
            f.footprint = {parse_double(tok[1], lineno), parse_double(tok[2], lineno),
                           parse_double(tok[3], lineno), parse_double(tok[4], lineno)};
            f.height = parse_double(tok[5], lineno);
            scene.foliage.push_back(f);
        }
        else
        {
            throw ConfigError("unknown scene record '" + tok[0] + "'", lineno);
        }
    }
    if (!saw_header)
        throw ConfigError("missing scene header", 1);
    if (!saw_terrain)
        throw ConfigError("missing terrain line", 2);
    validate_scene(scene);
    return scene;
}

void save_scene(const Scene &scene, const std::string &path)
{
    std::string text = scene_to_text(scene);
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw IoError("cannot open " + path + " for writing");
    os << text;
    if (!os)
        throw IoError("write failed: " + path);
}

Scene load_scene(const std::string &path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return scene_from_text(ss.str());
}

} // namespace uavchan
