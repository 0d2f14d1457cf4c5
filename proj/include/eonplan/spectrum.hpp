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

#ifndef EONPLAN_SPECTRUM_HPP_
#define EONPLAN_SPECTRUM_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eonplan/routing.hpp"
#include "eonplan/topology.hpp"

namespace eonplan {

using ConnectionId = int;
inline constexpr ConnectionId kFreeSlot = -1;

// Slot ownership of every directed link. Single writer: one grid belongs
// to one simulation run.
class SpectrumGrid {
 public:
  SpectrumGrid(std::size_t link_count, int slots);

  int slots() const { return slots_; }
  std::size_t link_count() const { return link_count_; }

  ConnectionId owner(LinkIndex link, int slot) const {
    return owner_[link * static_cast<std::size_t>(slots_) +
                  static_cast<std::size_t>(slot)];
  }

  // True when [start, start + width) is inside the grid and free on every
  // link of `links`.
  bool IsFree(std::span<const LinkIndex> links, int start, int width) const;

  // Throws InvariantViolation when any target slot is taken.
  void Occupy(std::span<const LinkIndex> links, int start, int width,
              ConnectionId id);
  // Throws InvariantViolation when a slot is not owned by `id`.
  void Release(std::span<const LinkIndex> links, int start, int width,
               ConnectionId id);

  std::size_t OccupiedCount() const;

  // One line per link: `name |` followed by one char per slot, '.' = free.
  std::string Raster(const Topology& topology) const;

  friend bool operator==(const SpectrumGrid&, const SpectrumGrid&) = default;

 private:
  std::size_t link_count_;
  int slots_;
  std::vector<ConnectionId> owner_;
};

struct Lightpath {
  ConnectionId id = 0;
  Path path;
  int start = 0;
  int width = 0;  // 0 = dormant, nothing held
  int bits_per_symbol = 1;
  long disruptions = 0;
  long blocked_events = 0;
};

struct Placement {
  std::size_t path_index = 0;
  int start = 0;

  friend bool operator==(const Placement&, const Placement&) = default;
};

// First candidate path (in the given order) with `width` contiguous slots
// free at the same indices on all of its links; lowest start on that path.
std::optional<Placement> FirstFit(const SpectrumGrid& grid,
                                  std::span<const Path> candidates, int width);

// Places a dormant lightpath with first-fit. Not a disruption; a failure
// counts one blocked event and leaves the lightpath dormant.
bool Place(SpectrumGrid& grid, Lightpath& lp, std::span<const Path> candidates,
           int width);

// Frees the top of the block; start stays. Throws std::invalid_argument when
// new_width exceeds the current width.
void Reduce(SpectrumGrid& grid, Lightpath& lp, int new_width);

// Hitless growth: upward first, then downward. Returns false and leaves the
// grid untouched when neither side has room.
bool Expand(SpectrumGrid& grid, Lightpath& lp, int new_width);

enum class ReallocationOutcome { kMoved, kSamePlace, kBlocked };

// Releases the block and re-runs first-fit for new_width. A move to a
// different (path, start) counts one disruption; a failure restores the old
// block and counts one blocked event.
ReallocationOutcome Reallocate(SpectrumGrid& grid, Lightpath& lp,
                               std::span<const Path> candidates, int new_width);

// Rebuilds the expected occupancy from `lightpaths` and compares it with
// the grid: no overlap, contiguity, continuity and the conservation
// identity. Throws InvariantViolation describing the first mismatch.
void AuditSpectrum(const SpectrumGrid& grid,
                   std::span<const Lightpath> lightpaths);

}  // namespace eonplan

#endif  // EONPLAN_SPECTRUM_HPP_
