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

#include "rissec/csv.hpp"

#include <cstdio>

namespace rissec {

const std::string& csv_header()
{
    static const std::string header =
        "axis,strategy,model,quantization,gamma,mu,c_target,mean_cs,ci_low,ci_high,sop,intercept,spsc,coverage,"
        "see,secure_power_dbm,prenull_failures,trials,seed";
    return header;
}

std::string format_number(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

std::string write_csv(const ResultTable& table)
{
    std::string out = csv_header();
    out += '\n';
    for (const auto& r : table.rows) {
        const auto& st = r.stats;
        std::string line;
        if (const auto* d = std::get_if<double>(&r.axis_value))
            line += format_number(*d);
        else
            line += std::get<std::string>(r.axis_value);
        line += ',' + r.strategy;
        line += ',' + r.model;
        line += ',' + (r.quantization_bits ? std::to_string(*r.quantization_bits) : std::string("inf"));
        line += ',' + format_number(r.gamma);
        line += ',' + (r.mu ? format_number(*r.mu) : std::string());
        line += ',' + format_number(st.c_target);
        line += ',' + format_number(st.mean_secrecy_rate);
        line += ',' + format_number(st.ci_low);
        line += ',' + format_number(st.ci_high);
        line += ',' + format_number(st.sop);
        line += ',' + format_number(st.intercept);
        line += ',' + format_number(st.spsc);
        line += ',' + format_number(st.coverage);
        line += ',' + format_number(st.see);
        if (st.secure_power && st.secure_power->attainable)
            line += ',' + format_number(st.secure_power->dbm);
        else if (st.secure_power)
            line += ",unattainable";
        else
            line += ',';
        line += ',' + std::to_string(r.nulling_failures);
        line += ',' + std::to_string(st.trials);
        line += ',' + std::to_string(table.metadata.seed);
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace rissec
