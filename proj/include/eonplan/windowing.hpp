// Copyright 2026 The eonplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EONPLAN_WINDOWING_HPP_
#define EONPLAN_WINDOWING_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "eonplan/trace.hpp"

namespace eonplan {

// Sliding-window geometry. A planning interval groups `fluctuations`
// consecutive base samples; a window sees `past` intervals before the
// present one and targets `horizon` intervals after it.
struct WindowShape {
  int past = 3;          // r
  int fluctuations = 6;  // k
  int horizon = 4;       // u

  std::size_t chi_size() const {
    return static_cast<std::size_t>((past + 1) * fluctuations);
  }
  void Validate() const;
};

struct WindowSample {
  std::size_t t_index = 0;   // present interval
  std::vector<double> chi;   // raw fluctuations of intervals t-r..t, oldest first
  std::vector<double> psi;   // per-interval maxima of t+1..t+u

  friend bool operator==(const WindowSample&, const WindowSample&) = default;
};

// Number of complete intervals in `samples` base samples (tail dropped).
std::size_t IntervalCount(std::size_t samples, const WindowShape& shape);

// floor(samples / k) - r - u, or 0 when no window fits.
std::size_t WindowCount(std::size_t samples, const WindowShape& shape);

// Smallest trace length that yields exactly `patterns` windows.
std::size_t SamplesForPatterns(std::size_t patterns, const WindowShape& shape);

// Maximum of the k fluctuations of interval `interval`.
double IntervalMax(const TrafficTrace& trace, int fluctuations,
                   std::size_t interval);

// One sample per present interval t = r .. intervals-u-1. Throws SizeError
// when fewer than k*(r+1+u) samples are available.
std::vector<WindowSample> BuildDataset(const TrafficTrace& trace,
                                       const WindowShape& shape);

// Min-max scaling onto [0, 1]. Values outside the fitted range map outside
// [0, 1]; nothing is clamped.
class Normalizer {
 public:
  Normalizer(double min, double max);

  // Fits over every chi and psi value of `training`.
  static Normalizer Fit(std::span<const WindowSample> training);

  double Apply(double gbps) const { return (gbps - min_) / (max_ - min_); }
  double Invert(double unit) const { return unit * (max_ - min_) + min_; }
  WindowSample Apply(const WindowSample& sample) const;

  double min() const { return min_; }
  double max() const { return max_; }

 private:
  double min_;
  double max_;
};

struct DatasetSplit {
  std::vector<WindowSample> train;
  std::vector<WindowSample> test;
};

// Chronological split: the first floor(n * train_fraction) samples train.
DatasetSplit SplitDataset(std::span<const WindowSample> dataset,
                          double train_fraction);

// Export contract: header `t_index,chi_0..,psi_0..`, one row per sample.
void WriteDatasetCsv(std::ostream& out, std::span<const WindowSample> samples,
                     const WindowShape& shape);
std::vector<WindowSample> ReadDatasetCsv(std::istream& in,
                                         const WindowShape& shape);

}  // namespace eonplan

#endif  // EONPLAN_WINDOWING_HPP_
