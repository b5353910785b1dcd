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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "uavchan/geom.hpp"
#include "uavchan/materials.hpp"

namespace uavchan
{

enum class ScenarioKind
{
    OverSea,
    Rural,
    Suburban,
    Urban,
};

const char *scenario_name(ScenarioKind kind);
ScenarioKind scenario_from_name(const std::string &name);

/// Opaque box scatterer: axis-aligned footprint extruded from the ground.
/// Ships reuse this shape with a PerfectConductor material.
struct Building
{
    Rect2 footprint;
    double height = 0.0;
    MaterialKind material = MaterialKind::Concrete;
};

/// Attenuation-only medium; rays pass through and pick up Weissberger loss.
struct FoliageBlock
{
    Rect2 footprint;
    double height = 0.0;
};

/// Immutable world geometry. Flat terrain spanning [0,width] x [0,depth] at
/// z = 0; all object coordinates are within that extent.
struct Scene
{
    double width = 10000.0;
    double depth = 10000.0;
    MaterialKind ground = MaterialKind::DryGround;
    std::vector<Building> buildings;
    std::vector<FoliageBlock> foliage;
    std::vector<Building> ships;
    std::uint64_t seed = 0;
    std::optional<ScenarioKind> kind; // empty for hand-built scenes
};

/// Straight horizontal receiver path sampled at uniform spacing.
struct TrajectorySpec
{
    Vec3 start;                 // first sample; start.z is ignored, height is used
    Vec2 heading{1.0, 0.0};     // horizontal direction, normalized internally
    double length = 2000.0;     // m
    double height = 150.0;      // m above ground
    double speed = 15.0;        // m/s, metadata only
    double spacing = 1.0;       // m between samples
};

// Ground-station anchor and default flight line used by generate_scenario.
// The 2 km x 1 km build corridor starts at the transmitter and flanks the
// trajectory's ground projection.
inline constexpr Vec2 kTxGround{4000.0, 5000.0};
inline constexpr double kTrajStartOffset = 50.0;   // m east of the transmitter
inline constexpr double kTrajLateralOffset = 20.0; // m north of the transmitter
inline constexpr double kCorridorLength = 2000.0;  // m
inline constexpr double kCorridorHalfWidth = 500.0;

/// Scenario geometry generated deterministically from (kind, seed):
/// object counts and height ranges follow the scenario parameter table
/// (rural 10 buildings 4-8 m, suburban 20 at 4-30 m, urban 100 at 70-180 m,
/// over-sea two metallic ships on sea water). Building footprints are random
/// axis-aligned rectangles arranged in street rows flanking the flight line,
/// never overlapping each other or the cleared flight corridor.
/// Throws SceneGenerationError (reporting the seed) if placement fails.
Scene generate_scenario(ScenarioKind kind, std::uint64_t seed);

/// Default trajectory for a scenario sweep at the given receiver height.
TrajectorySpec default_trajectory(double height_m, double length_m = 2000.0,
                                  double spacing_m = 1.0, double speed_mps = 15.0);

/// Receiver positions along the spec'd line: floor(length/spacing)+1 samples
/// starting at `start`, all at z = height.
std::vector<Vec3> trajectory_samples(const TrajectorySpec &spec);

/// Check all structural invariants; throws SceneGenerationError on violation.
void validate_scene(const Scene &scene);

// --- line-oriented text format ------------------------------------------
//
//   scene v1 <kind> <seed>
//   terrain <width> <depth> <ground-material>
//   building <x0> <y0> <x1> <y1> <h> <material>
//   foliage <x0> <y0> <x1> <y1> <h>
//   ship <x0> <y0> <x1> <y1> <h> <material>
//
// Numbers use shortest round-trip decimal form; lines end with '\n'.
// Parsing and re-serializing a file reproduces it byte-exactly.

std::string scene_to_text(const Scene &scene);
Scene scene_from_text(const std::string &text);
void save_scene(const Scene &scene, const std::string &path);
Scene load_scene(const std::string &path);

} // namespace uavchan
