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

#include <stdexcept>
#include <string>

namespace uavchan
{

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Input outside a propagation/material model's published validity range.
class ModelValidityError : public Error
{
  public:
    using Error::Error;
};

/// Material has no permittivity model (foliage is attenuation-only).
class UnsupportedMaterialError : public Error
{
  public:
    using Error::Error;
};

/// Object placement failed after bounded retries; message reports the seed.
class SceneGenerationError : public Error
{
  public:
    using Error::Error;
};

/// Degenerate ray geometry. Carries the id of the offending surface.
class GeometryError : public Error
{
  public:
    GeometryError(std::string surface, const std::string &what)
        : Error(what), surface_(std::move(surface))
    {
    }
    const std::string &surface() const noexcept { return surface_; }

  private:
    std::string surface_;
};

/// LFSR feedback taps do not produce a maximal-length sequence.
class InvalidTapsError : public Error
{
  public:
    using Error::Error;
};

/// No usable spectral peak found by the CFO estimator.
class EstimationFailedError : public Error
{
  public:
    using Error::Error;
};

/// Configuration / text-format parse failure. line() is 1-based, 0 if N/A.
class ConfigError : public Error
{
  public:
    explicit ConfigError(const std::string &what, int line = 0) : Error(what), line_(line) {}
    int line() const noexcept { return line_; }

  private:
    int line_ = 0;
};

/// File read/write failure.
class IoError : public Error
{
  public:
    using Error::Error;
};

/// Campaign-level failure (e.g. too many invalid trajectory points).
class CampaignError : public Error
{
  public:
    using Error::Error;
};

} // namespace uavchan
