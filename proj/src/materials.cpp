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

#include "uavchan/materials.hpp"

#include <cmath>
#include <numbers>

#include "uavchan/errors.hpp"
#include "uavchan/geom.hpp"

namespace uavchan
{

const char *material_name(MaterialKind kind)
{
    switch (kind)
    {
    case MaterialKind::Concrete:
        return "concrete";
    case MaterialKind::DryGround:
        return "dry_ground";
    case MaterialKind::SeaWater:
        return "sea_water";
    case MaterialKind::PerfectConductor:
        return "pec";
    case MaterialKind::Foliage:
        return "foliage";
    }
    return "unknown";
}

MaterialKind material_from_name(const std::string &name)
{
    if (name == "concrete")
        return MaterialKind::Concrete;
    if (name == "dry_ground")
        return MaterialKind::DryGround;
    if (name == "sea_water")
        return MaterialKind::SeaWater;
    if (name == "pec")
        return MaterialKind::PerfectConductor;
    if (name == "foliage")
        return MaterialKind::Foliage;
    throw ConfigError("unknown material name: " + name);
}

std::complex<double> sea_water_permittivity(double f_hz, double temperature_c, double salinity_g_kg)
{
    const double T = temperature_c;
    const double S = salinity_g_kg;
    const double f_ghz = f_hz * 1e-9;

    // Pure-water double-Debye parameters (Meissner-Wentz fit used by
    // ITU-R P.527). Relaxation frequencies in GHz.
    const double eps_s0 = (3.70886e4 - 8.2168e1 * T) / (4.21854e2 + T);
    const double eps_10 = 5.7230 + 2.2379e-2 * T - 7.1237e-4 * T * T;
    const double nu_10 = (45.0 + T) / (5.0478 - 7.0315e-2 * T + 6.0059e-4 * T * T);
    const double eps_inf0 = 3.6143 + 2.8841e-2 * T;
    const double nu_20 = (45.0 + T) / (1.3652e-1 + 1.4825e-3 * T + 2.4166e-4 * T * T);

    // Salinity corrections.
    const double eps_s = eps_s0 * std::exp(-3.56417e-3 * S + 4.74868e-6 * S * S + 1.15574e-5 * T * S);
    const double nu_1 = nu_10 * (1.0 + S * (2.39357e-3 - 3.13530e-5 * T + 2.52477e-7 * T * T));
    const double eps_1 = eps_10 * std::exp(-6.28908e-3 * S + 1.76032e-4 * S * S - 9.22144e-5 * T * S);
    const double nu_2 = nu_20 * (1.0 + S * (-1.99723e-2 + 1.81176e-4 * T));
    const double eps_inf = eps_inf0 * (1.0 + S * (-2.04265e-3 + 1.57883e-4 * T));

    // Ionic conductivity of sea water (S/m).
    const double sigma_35 =
        2.903602 + 8.60700e-2 * T + 4.738817e-4 * T * T - 2.9910e-6 * T * T * T + 4.3047e-9 * T * T * T * T;
    const double r15 = S * (37.5109 + 5.45216 * S + 1.4409e-2 * S * S) /
                       (1004.75 + 182.283 * S + S * S);
    const double alpha0 = (6.9431 + 3.2841 * S - 9.9486e-2 * S * S) /
                          (84.850 + 69.024 * S + S * S);
    const double alpha1 = 49.843 - 0.2276 * S + 0.198e-2 * S * S;
    const double sigma = sigma_35 * r15 * (1.0 + alpha0 * (T - 15.0) / (alpha1 + T));

    const std::complex<double> j(0.0, 1.0);
    std::complex<double> eps = (eps_s - eps_1) / (1.0 + j * (f_ghz / nu_1)) +
                               (eps_1 - eps_inf) / (1.0 + j * (f_ghz / nu_2)) + eps_inf;
    eps -= j * sigma / (2.0 * std::numbers::pi * f_hz * kVacuumPermittivity);
    return eps;
}

RelativePermittivity material_permittivity(MaterialKind kind, double f_c_hz)
{
    if (kind == MaterialKind::Foliage)
        throw UnsupportedMaterialError("foliage is attenuation-only and has no permittivity model");
    if (!(f_c_hz >= 10e9 && f_c_hz <= 100e9))
        throw ModelValidityError("material models are valid for 10-100 GHz only");

    const std::complex<double> j(0.0, 1.0);
    switch (kind)
    {
    case MaterialKind::Concrete:
    {
        const double f_ghz = f_c_hz * 1e-9;
        const double sigma = 0.0326 * std::pow(f_ghz, 0.8095);
        return {5.31 - j * sigma / (2.0 * std::numbers::pi * f_c_hz * kVacuumPermittivity), false};
    }
    case MaterialKind::DryGround:
    {
        const double sigma = 0.035;
        return {15.0 - j * sigma / (2.0 * std::numbers::pi * f_c_hz * kVacuumPermittivity), false};
    }
    case MaterialKind::SeaWater:
        return {sea_water_permittivity(f_c_hz), false};
    case MaterialKind::PerfectConductor:
        return {std::complex<double>(1.0, 0.0), true};
    default:
        break;
    }
    throw UnsupportedMaterialError("unhandled material kind");
}

} // namespace uavchan
