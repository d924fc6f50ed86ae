/*
 * Copyright 2026 eglfr-kit developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "eglfr/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "eglfr/specfun.hpp"

namespace eglfr {

double Dataset::mean() const {
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(size());
}

const std::vector<double>& aarset_values() {
  // Lifetimes of 50 devices (Aarset 1987), the original 50-value series.
  static const std::vector<double> v = {
      0.1, 0.2, 1,  1,  1,  1,  1,  2,  3,  6,  7,  11, 12, 18, 18, 18, 18,
      18,  21,  32, 36, 40, 45, 46, 47, 50, 55, 60, 63, 63, 67, 67, 67, 67,
      72,  75,  79, 82, 82, 83, 84, 84, 84, 85, 85, 85, 85, 85, 86, 86};
  return v;
}

Dataset make_dataset(std::vector<double> values, std::string name, std::string source) {
  if (values.empty()) throw DataError("dataset '" + name + "' is empty");
  std::ostringstream bad;
  int nbad = 0;
  for (double x : values) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      if (nbad++) bad << ", ";
      bad << x;
    }
  }
  if (nbad > 0)
    throw DataError("dataset '" + name + "' has " + std::to_string(nbad) +
                    " non-positive value(s): " + bad.str());
  std::sort(values.begin(), values.end());
  Dataset d;
  d.values = std::move(values);
  d.name = std::move(name);
  d.source = std::move(source);
  return d;
}

Dataset load_dataset(const std::string& path_or_keyword) {
  if (path_or_keyword == "aarset")
    return make_dataset(aarset_values(), "aarset", "embedded");

  std::ifstream in(path_or_keyword);
  if (!in) throw DataError("cannot open data file: " + path_or_keyword);
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      std::size_t start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::string tok = line.substr(start, pos - start);
      try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        values.push_back(v);
      } catch (const std::exception&) {
        throw DataError("parse error at line " + std::to_string(line_no) + ", column " +
                        std::to_string(start + 1) + ": '" + tok + "'");
      }
    }
  }
  return make_dataset(std::move(values), path_or_keyword, path_or_keyword);
}

unsigned long long dataset_digest(const Dataset& d) {
  std::string s;
  char buf[64];
  for (double v : d.values) {
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    s += buf;
  }
  return specfun::fnv1a64(s.data(), static_cast<unsigned long>(s.size()));
}

}  // namespace eglfr
