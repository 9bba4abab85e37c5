// SPDX-License-Identifier: Apache-2.0
//
// rissec: Monte-Carlo secrecy simulator for RIS-assisted wiretap channels
// Copyright (C) 2026 The rissec authors
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
#include <numbers>
#include <vector>

namespace rissec {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double kPi = std::numbers::pi;

/// Power in dBm to watts: x dBm = 10^(x/10) mW.
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Ratio in dB to linear scale.
double db_to_linear(double db);

/// Wraps an angle into (-pi, pi].
double wrap_phase(double radians);

/// Absolute angular distance between two phases, in [0, pi].
double angular_distance(double a, double b);

}  // namespace rissec
