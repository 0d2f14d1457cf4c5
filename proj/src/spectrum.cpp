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

#include "eonplan/spectrum.hpp"

#include <stdexcept>

#include "eonplan/error.hpp"

namespace eonplan {
namespace {

char SlotGlyph(ConnectionId id) {
  static constexpr char kGlyphs[] =
      "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  if (id == kFreeSlot) return '.';
  return kGlyphs[static_cast<std::size_t>(id) % (sizeof(kGlyphs) - 1)];
}

}  // namespace

SpectrumGrid::SpectrumGrid(std::size_t link_count, int slots)
    : link_count_(link_count), slots_(slots) {
  if (slots < 1) throw ConfigError("spectrum grid needs at least one slot");
  owner_.assign(link_count * static_cast<std::size_t>(slots), kFreeSlot);
}

bool SpectrumGrid::IsFree(std::span<const LinkIndex> links, int start,
                          int width) const {
  if (start < 0 || width < 0 || start + width > slots_) return false;
  for (LinkIndex l : links) {
    for (int s = start; s < start + width; ++s) {
      if (owner(l, s) != kFreeSlot) return false;
    }
  }
  return true;
}

void SpectrumGrid::Occupy(std::span<const LinkIndex> links, int start,
                          int width, ConnectionId id) {
  if (!IsFree(links, start, width)) {
    throw InvariantViolation("occupy [" + std::to_string(start) + ", " +
                             std::to_string(start + width) + ") for " +
                             std::to_string(id) + ": slots not free");
  }
  for (LinkIndex l : links) {
    for (int s = start; s < start + width; ++s) {
      owner_[l * static_cast<std::size_t>(slots_) +
             static_cast<std::size_t>(s)] = id;
    }
  }
}

void SpectrumGrid::Release(std::span<const LinkIndex> links, int start,
                           int width, ConnectionId id) {
  for (LinkIndex l : links) {
    for (int s = start; s < start + width; ++s) {
      if (s < 0 || s >= slots_ || owner(l, s) != id) {
        throw InvariantViolation("release of slot " + std::to_string(s) +
                                 " on link " + std::to_string(l) +
                                 " not owned by " + std::to_string(id));
      }
    }
  }
  for (LinkIndex l : links) {
    for (int s = start; s < start + width; ++s) {
      owner_[l * static_cast<std::size_t>(slots_) +
             static_cast<std::size_t>(s)] = kFreeSlot;
    }
  }
}

std::size_t SpectrumGrid::OccupiedCount() const {
  std::size_t n = 0;
  for (ConnectionId id : owner_) n += id != kFreeSlot;
  return n;
}

std::string SpectrumGrid::Raster(const Topology& topology) const {
  std::string out;
  for (std::size_t l = 0; l < link_count_; ++l) {
    out += topology.LinkName(l);
    out += " |";
    for (int s = 0; s < slots_; ++s) out += SlotGlyph(owner(l, s));
    out += "|\n";
  }
  return out;
}

std::optional<Placement> FirstFit(const SpectrumGrid& grid,
                                  std::span<const Path> candidates, int width) {
  if (width < 1) throw std::invalid_argument("first-fit width must be >= 1");
  const int slots = grid.slots();
  for (std::size_t p = 0; p < candidates.size(); ++p) {
    const auto& links = candidates[p].links;
    if (links.empty()) continue;
    int run = 0;
    for (int s = 0; s < slots; ++s) {
      bool free = true;
      for (LinkIndex l : links) {
        if (grid.owner(l, s) != kFreeSlot) {
          free = false;
          break;
        }
      }
      run = free ? run + 1 : 0;
      if (run == width) return Placement{p, s - width + 1};
    }
  }
  return std::nullopt;
}

bool Place(SpectrumGrid& grid, Lightpath& lp, std::span<const Path> candidates,
           int width) {
  if (lp.width != 0) {
    throw std::invalid_argument("place: lightpath " + std::to_string(lp.id) +
                                " already holds spectrum");
  }
  if (width == 0) return true;
  auto fit = FirstFit(grid, candidates, width);
  if (!fit) {
    ++lp.blocked_events;
    return false;
  }
  lp.path = candidates[fit->path_index];
  lp.start = fit->start;
  lp.width = width;
  grid.Occupy(lp.path.links, lp.start, lp.width, lp.id);
  return true;
}

void Reduce(SpectrumGrid& grid, Lightpath& lp, int new_width) {
  if (new_width < 0 || new_width > lp.width) {
    throw std::invalid_argument("reduce: new width " +
                                std::to_string(new_width) +
                                " outside [0, " + std::to_string(lp.width) +
                                "]");
  }
  grid.Release(lp.path.links, lp.start + new_width, lp.width - new_width,
               lp.id);
  lp.width = new_width;
}

bool Expand(SpectrumGrid& grid, Lightpath& lp, int new_width) {
  if (new_width <= lp.width) {
    throw std::invalid_argument("expand: new width must exceed current");
  }
  const int extra = new_width - lp.width;
  if (grid.IsFree(lp.path.links, lp.start + lp.width, extra)) {
    grid.Occupy(lp.path.links, lp.start + lp.width, extra, lp.id);
    lp.width = new_width;
    return true;
  }
  if (grid.IsFree(lp.path.links, lp.start - extra, extra)) {
    grid.Occupy(lp.path.links, lp.start - extra, extra, lp.id);
    lp.start -= extra;
    lp.width = new_width;
    return true;
  }
  return false;
}

ReallocationOutcome Reallocate(SpectrumGrid& grid, Lightpath& lp,
                               std::span<const Path> candidates,
                               int new_width) {
  const Path old_path = lp.path;
  const int old_start = lp.start;
  const int old_width = lp.width;
  grid.Release(lp.path.links, lp.start, lp.width, lp.id);
  auto fit = FirstFit(grid, candidates, new_width);
  if (!fit) {
    grid.Occupy(old_path.links, old_start, old_width, lp.id);
    ++lp.blocked_events;
    return ReallocationOutcome::kBlocked;
  }
  const Path& path = candidates[fit->path_index];
  grid.Occupy(path.links, fit->start, new_width, lp.id);
  const bool same = path == old_path && fit->start == old_start;
  lp.path = path;
  lp.start = fit->start;
  lp.width = new_width;
  if (same) return ReallocationOutcome::kSamePlace;
  ++lp.disruptions;
  return ReallocationOutcome::kMoved;
}

void AuditSpectrum(const SpectrumGrid& grid,
                   std::span<const Lightpath> lightpaths) {
  SpectrumGrid expected(grid.link_count(), grid.slots());
  std::size_t claimed = 0;
  for (const auto& lp : lightpaths) {
    const std::string who = "lightpath " + std::to_string(lp.id);
    if (lp.width < 0 || lp.start < 0 || lp.start + lp.width > grid.slots()) {
      throw InvariantViolation(who + ": block [" + std::to_string(lp.start) +
                               ", +" + std::to_string(lp.width) +
                               ") outside the grid");
    }
    if (lp.width == 0) continue;
    if (lp.path.links.empty()) {
      throw InvariantViolation(who + ": holds spectrum without a path");
    }
    if (!expected.IsFree(lp.path.links, lp.start, lp.width)) {
      throw InvariantViolation(who + ": overlaps another lightpath");
    }
    expected.Occupy(lp.path.links, lp.start, lp.width, lp.id);
    claimed += lp.path.links.size() * static_cast<std::size_t>(lp.width);
  }
  if (grid.OccupiedCount() != claimed) {
    throw InvariantViolation("conservation: grid holds " +
                             std::to_string(grid.OccupiedCount()) +
                             " slots, lightpaths account for " +
                             std::to_string(claimed));
  }
  if (!(expected == grid)) {
    for (std::size_t l = 0; l < grid.link_count(); ++l) {
      for (int s = 0; s < grid.slots(); ++s) {
        if (expected.owner(l, s) != grid.owner(l, s)) {
          throw InvariantViolation(
              "link " + std::to_string(l) + " slot " + std::to_string(s) +
              ": grid owner " + std::to_string(grid.owner(l, s)) +
              ", expected " + std::to_string(expected.owner(l, s)));
        }
      }
    }
  }
}

}  // namespace eonplan
