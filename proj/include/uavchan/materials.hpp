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

#include <complex>
#include <string>

namespace uavchan
{

enum class MaterialKind
{
    Concrete,
    DryGround,
    SeaWater,
    PerfectConductor,
    Foliage, // attenuation-only medium, no permittivity model
};

const char *material_name(MaterialKind kind);
MaterialKind material_from_name(const std::string &name);

/// Complex relative permittivity eta = eps' - j sigma / (2 pi f eps0).
/// perfect_conductor marks the infinite-conductivity limit; value is then
/// meaningless and reflection handling must special-case it.
struct RelativePermittivity
{
    std::complex<double> value{1.0, 0.0};
    bool perfect_conductor = false;
};

/// Material permittivity at carrier f_c_hz. Models:
///   Concrete   ITU-R P.2040:  eps' = 5.31, sigma = 0.0326 f_GHz^0.8095 S/m
///   DryGround  medium dry ground: eps' = 15, sigma = 0.035 S/m (flat in band)
///   SeaWater   ITU-R P.527 double-Debye at 20 degC, salinity 35 g/kg
///   PerfectConductor  infinite-conductivity marker
/// Valid for f_c_hz in [10, 100] GHz; throws ModelValidityError outside,
/// UnsupportedMaterialError for Foliage.
RelativePermittivity material_permittivity(MaterialKind kind, double f_c_hz);

/// Double-Debye sea-water permittivity (ITU-R P.527 formulation) at the given
/// frequency, water temperature (degC) and salinity (g/kg). Exposed separately
/// so the default 20 degC / 35 g/kg choice can be overridden.
std::complex<double> sea_water_permittivity(double f_hz, double temperature_c = 20.0,
                                            double salinity_g_kg = 35.0);

} // namespace uavchan
