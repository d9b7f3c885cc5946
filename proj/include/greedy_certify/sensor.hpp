// Copyright 2026 The Authors.
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

// Sensor coverage on a rectangular mission space.
//
// Sensor i sits at lattice point s_i and detects an event at x with
// probability p_i(x) = exp(-lambda_i |x - s_i|). The coverage objective is
//
//   H(S) = sum_cells R(c) (1 - prod_i (1 - p_i(c))) area(c)
//
// over the cell centres c (midpoint rule). Homogeneous sensors share
// lambda_i = lambda_1 and a location holds at most one sensor; with
// nonhomogeneous sensors lambda_i = lambda_1 + zeta t_i, t_i = 0.1 (i - 1),
// and locations may be reused.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "greedy_certify/bounds.hpp"
#include "greedy_certify/greedy.hpp"
#include "greedy_certify/parallel.hpp"
#include "greedy_certify/problem.hpp"
#include "greedy_certify/seed.hpp"

namespace greedy_certify {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct MissionSpace {
  double width = 50.0;
  double height = 40.0;
  double cell_size = 1.0;
  double placement_spacing = 1.0;

  std::size_t cols() const { return static_cast<std::size_t>(std::llround(width / cell_size)); }
  std::size_t rows() const { return static_cast<std::size_t>(std::llround(height / cell_size)); }
  std::size_t cells() const { return cols() * rows(); }
  double cell_area() const { return cell_size * cell_size; }

  // Row-major from the bottom-left corner.
  Point cell_center(std::size_t cell) const {
    return {(static_cast<double>(cell % cols()) + 0.5) * cell_size,
            (static_cast<double>(cell / cols()) + 0.5) * cell_size};
  }

  std::size_t lattice_cols() const {
    return static_cast<std::size_t>(std::floor(width / placement_spacing + 1e-9)) + 1;
  }
  std::size_t lattice_rows() const {
    return static_cast<std::size_t>(std::floor(height / placement_spacing + 1e-9)) + 1;
  }
  std::size_t placements() const { return lattice_cols() * lattice_rows(); }
  Point lattice_point(SymbolId id) const {
    return {static_cast<double>(id % lattice_cols()) * placement_spacing,
            static_cast<double>(id / lattice_cols()) * placement_spacing};
  }
  // Id of the lattice point nearest to p.
  SymbolId nearest_lattice_id(Point p) const {
    const auto a = static_cast<std::size_t>(std::llround(p.x / placement_spacing));
    const auto b = static_cast<std::size_t>(std::llround(p.y / placement_spacing));
    return static_cast<SymbolId>(b * lattice_cols() + a);
  }

  void validate() const {
    if (!(width > 0) || !(height > 0) || !(cell_size > 0) || !(placement_spacing > 0)) {
      throw std::invalid_argument("mission space dimensions must be positive");
    }
    const double cx = width / cell_size;
    const double cy = height / cell_size;
    if (std::abs(cx - std::round(cx)) > 1e-9 || std::abs(cy - std::round(cy)) > 1e-9) {
      throw std::invalid_argument("cell size must tile the mission space exactly");
    }
  }
};

struct EventDensityField {
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::vector<double> values;  // row-major, like MissionSpace cells

  double at(std::size_t cell) const { return values[cell]; }
};

// True for the top-right and bottom-left quadrants.
inline bool high_density_quadrant(const MissionSpace& space, Point p) {
  const bool right = p.x >= space.width / 2;
  const bool top = p.y >= space.height / 2;
  return right == top;
}

// R ~ U(0.5, 0.8) in the high-density quadrants, U(0.1, 0.3) elsewhere,
// drawn cell by cell in row-major order.
inline EventDensityField generate_density(const MissionSpace& space, std::uint64_t seed) {
  space.validate();
  EventDensityField field;
  field.cols = space.cols();
  field.rows = space.rows();
  field.values.resize(space.cells());
  CounterRng rng(seed_derive(seed, "density"));
  for (std::size_t c = 0; c < field.values.size(); ++c) {
    field.values[c] = high_density_quadrant(space, space.cell_center(c)) ? rng.uniform(0.5, 0.8)
                                                                         : rng.uniform(0.1, 0.3);
  }
  return field;
}

enum class DecayMode { kHomogeneous, kNonhomogeneous };

inline std::string to_string(DecayMode m) {
  return m == DecayMode::kHomogeneous ? "homo" : "nonhomo";
}

inline DecayMode parse_decay_mode(const std::string& s) {
  if (s == "homo" || s == "homogeneous") return DecayMode::kHomogeneous;
  if (s == "nonhomo" || s == "nonhomogeneous") return DecayMode::kNonhomogeneous;
  throw std::invalid_argument("unknown decay mode '" + s + "'");
}

struct DecaySchedule {
  DecayMode mode = DecayMode::kHomogeneous;
  double lambda1 = 1.0;
  double zeta = 0.1;

  // lambda_i for epoch i >= 1.
  double lambda(std::size_t epoch) const {
    if (mode == DecayMode::kHomogeneous) return lambda1;
    return lambda1 + zeta * 0.1 * static_cast<double>(epoch - 1);
  }

  void validate(std::size_t horizon) const {
    for (std::size_t i = 1; i <= std::max<std::size_t>(horizon, 1); ++i) {
      if (!(lambda(i) > 0)) {
        throw std::invalid_argument("decay rate lambda_" + std::to_string(i) +
                                    " must be positive");
      }
    }
  }
};

// 1 - prod_i (1 - exp(-lambda_i |x - s_i|)).
inline double detection_probability(Point x, std::span<const Point> sensors,
                                    const DecaySchedule& schedule) {
  double miss = 1.0;
  for (std::size_t i = 0; i < sensors.size(); ++i) {
    miss *= 1.0 - std::exp(-schedule.lambda(i + 1) * distance(x, sensors[i]));
  }
  return 1.0 - miss;
}

inline double coverage_objective(std::span<const Point> sensors, const EventDensityField& field,
                                 const MissionSpace& space, const DecaySchedule& schedule) {
  if (field.cols != space.cols() || field.rows != space.rows()) {
    throw std::invalid_argument("density field does not match the mission space");
  }
  double h = 0.0;
  for (std::size_t c = 0; c < field.values.size(); ++c) {
    h += field.values[c] * detection_probability(space.cell_center(c), sensors, schedule);
  }
  return h * space.cell_area();
}

// H over lattice-index strings. Extensions reuse the prefix's per-cell miss
// product, so one epoch of greedy costs O(candidates * cells).
class SensorObjective final : public ObjectiveOracle<double> {
 public:
  SensorObjective(MissionSpace space, EventDensityField field, DecaySchedule schedule)
      : space_(space), field_(std::move(field)), schedule_(schedule) {
    centers_.reserve(space_.cells());
    for (std::size_t c = 0; c < space_.cells(); ++c) centers_.push_back(space_.cell_center(c));
  }

  double evaluate(std::span<const SymbolId> seq) const override {
    const std::vector<double> miss = miss_products(seq);
    double h = 0.0;
    for (std::size_t c = 0; c < miss.size(); ++c) h += field_.values[c] * (1.0 - miss[c]);
    return h * space_.cell_area();
  }

  void evaluate_extensions(std::span<const SymbolId> prefix, std::span<const SymbolId> candidates,
                           std::span<double> out) const override {
    const std::vector<double> miss = miss_products(prefix);
    const double lambda = schedule_.lambda(prefix.size() + 1);
    const auto values = parallel_map(candidates.size(), [&](std::size_t i) {
      const Point s = space_.lattice_point(candidates[i]);
      double h = 0.0;
      for (std::size_t c = 0; c < miss.size(); ++c) {
        const double p = std::exp(-lambda * distance(centers_[c], s));
        h += field_.values[c] * (1.0 - miss[c] * (1.0 - p));
      }
      return h * space_.cell_area();
    });
    std::copy(values.begin(), values.end(), out.begin());
  }

  const MissionSpace& space() const { return space_; }
  const EventDensityField& field() const { return field_; }
  const DecaySchedule& schedule() const { return schedule_; }

 private:
  std::vector<double> miss_products(std::span<const SymbolId> seq) const {
    std::vector<double> miss(centers_.size(), 1.0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const Point s = space_.lattice_point(seq[i]);
      const double lambda = schedule_.lambda(i + 1);
      for (std::size_t c = 0; c < centers_.size(); ++c) {
        miss[c] *= 1.0 - std::exp(-lambda * distance(centers_[c], s));
      }
    }
    return miss;
  }

  MissionSpace space_;
  EventDensityField field_;
  DecaySchedule schedule_;
  std::vector<Point> centers_;
};

inline ProblemInstance<double> make_sensor_problem(const MissionSpace& space,
                                                   const EventDensityField& field,
                                                   const DecaySchedule& schedule,
                                                   std::size_t horizon) {
  space.validate();
  schedule.validate(horizon);
  const bool homogeneous = schedule.mode == DecayMode::kHomogeneous;
  const std::size_t n = space.placements();
  return ProblemInstance<double>(n, horizon,
                                 std::make_shared<SensorObjective>(space, field, schedule),
                                 std::make_shared<UniformDomain>(n, horizon, !homogeneous),
                                 ProblemTraits{homogeneous, !homogeneous});
}

struct SensorConfig {
  DecayMode mode = DecayMode::kHomogeneous;
  std::vector<std::size_t> horizons{5};
  std::vector<double> lambdas{0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0};
  double zeta = 0.1;
  std::uint64_t seed = 1;
  MissionSpace space;
  EnumerationGuard guard;
};

struct SensorRow {
  DecayMode mode = DecayMode::kHomogeneous;
  double lambda1 = 0.0;
  double zeta = 0.0;
  std::uint64_t seed = 0;
  std::size_t cells = 0;
  std::size_t placements = 0;
  StringSeq choices;
  BoundReport<double> bounds;
  double millis = 0.0;
};

inline SensorRow run_sensor_point(const SensorConfig& config, const EventDensityField& field,
                                  double lambda1, std::size_t horizon) {
  DecaySchedule schedule{config.mode, lambda1, config.zeta};
  ProblemInstance<double> problem = make_sensor_problem(config.space, field, schedule, horizon);
  SensorRow row;
  row.mode = config.mode;
  row.lambda1 = lambda1;
  row.zeta = config.mode == DecayMode::kHomogeneous ? 0.0 : config.zeta;
  row.seed = config.seed;
  row.cells = config.space.cells();
  row.placements = config.space.placements();
  GreedyTrace<double> trace = run_greedy(problem);
  row.bounds = compute_bound_report(problem, trace, config.guard);
  row.choices = trace.choices;
  return row;
}

// One row per (K, lambda_1) pair, K-major, in the configured order.
inline std::vector<SensorRow> run_sensor_experiment(const SensorConfig& config) {
  const EventDensityField field = generate_density(config.space, config.seed);
  std::vector<SensorRow> rows;
  for (std::size_t k : config.horizons) {
    for (double lambda : config.lambdas) rows.push_back(run_sensor_point(config, field, lambda, k));
  }
  return rows;
}

}  // namespace greedy_certify
