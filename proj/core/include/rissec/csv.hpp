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

#include <string>

#include "rissec/engine.hpp"

namespace rissec {

/// Header of the result CSV. Consumers key on this exact line.
const std::string& csv_header();

/// One header line, then one row per (series, axis value). Numbers use 9
/// significant digits; output is byte-identical for identical tables.
std::string write_csv(const ResultTable& table);

/// printf("%.9g").
std::string format_number(double x);

}  // namespace rissec
