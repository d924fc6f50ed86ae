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

#ifndef EGLFR_DATASET_HPP
#define EGLFR_DATASET_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace eglfr {

/// Ordered sample of positive lifetimes.
struct Dataset {
  std::vector<double> values;  // sorted ascending, all > 0
  std::string name;
  std::string source;  // "embedded" or a file path

  std::size_t size() const { return values.size(); }
  double min() const { return values.front(); }
  double max() const { return values.back(); }
  double mean() const;
};

/// Parse/validation failures carry a message with line and column.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Builds a dataset from raw values: validates (> 0, finite, nonempty) and
/// sorts. Throws DataError listing offending values.
Dataset make_dataset(std::vector<double> values, std::string name, std::string source);

/// Loads whitespace/newline-separated decimal numbers from a file, or the
/// embedded Aarset device-lifetime data for the keyword "aarset".
Dataset load_dataset(const std::string& path_or_keyword);

/// The 50 device lifetimes (Aarset 1987).
const std::vector<double>& aarset_values();

/// FNV-1a 64 digest of the canonical serialization ("%.17g" per line).
unsigned long long dataset_digest(const Dataset& d);

}  // namespace eglfr

#endif
