// Copyright 2026 The aerts-machines Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aerts/geometry.hpp"
#include "aerts/kernels.hpp"
#include "aerts/quantum.hpp"
#include "aerts/random.hpp"
#include "aerts/stats.hpp"

/// Elastic-band Bell entity: experimenters A (left end) and B (right end)
/// either pull their end and measure the collected length, or look at the
/// color of the band.
namespace aerts::bell {

enum class Side { A, B };
enum class ExperimentKind { Pull, Color };
enum class BandColor { Red, Other };

struct Experiment {
  Side side;
  ExperimentKind kind;

  friend bool operator==(const Experiment&, const Experiment&) = default;
};

inline constexpr Experiment kPullA{Side::A, ExperimentKind::Pull};
inline constexpr Experiment kColorA{Side::A, ExperimentKind::Color};
inline constexpr Experiment kPullB{Side::B, ExperimentKind::Pull};
inline constexpr Experiment kColorB{Side::B, ExperimentKind::Color};

/// Breaks at a uniformly random point when pulled from both ends.
struct UniformBreak {};

/// Breaks at `position`, measured from the left (A) end.
struct FixedBreak {
  double position = 0.0;
};

using BandBreakProfile = std::variant<UniformBreak, FixedBreak>;

/// Unbroken band. `held_by` is set once a single experimenter has pulled the
/// whole band into their hands.
struct Whole {
  BandBreakProfile profile;
  std::optional<Side> held_by;
};

/// Two fragments; `left` belongs to A, `right` to B.
struct Broken {
  double left = 0.0;
  double right = 0.0;
};

class BandEntity {
 public:
  /// Throws InvalidParameter for L <= 0 or a FixedBreak not strictly inside (0, L).
  static BandEntity whole(BandBreakProfile profile, double length = 1.0,
                          BandColor color = BandColor::Red);
  /// Pre-broken band with fragments left and L - left. Throws for left outside [0, L].
  static BandEntity broken(double left, double length = 1.0, BandColor color = BandColor::Red);

  double length() const { return length_; }
  BandColor color() const { return color_; }
  const std::variant<Whole, Broken>& state() const { return state_; }

  bool is_whole() const { return std::holds_alternative<Whole>(state_); }
  bool is_broken() const { return std::holds_alternative<Broken>(state_); }
  /// Whole band already carried off by one experimenter.
  bool is_relocated() const;

  /// Fragment lengths; throws std::bad_variant_access unless broken.
  const Broken& fragments() const { return std::get<Broken>(state_); }

 private:
  BandEntity(double length, BandColor color, std::variant<Whole, Broken> state)
      : length_(length), color_(color), state_(std::move(state)) {}

  friend struct BandTransitions;

  double length_;
  BandColor color_;
  std::variant<Whole, Broken> state_;
};

struct SingleResult {
  Outcome outcome;
  BandEntity post_state;
};

struct CoincidenceResult {
  Outcome outcome_a;
  Outcome outcome_b;
  BandEntity post_state;
};

/// One experiment by one experimenter. Pulling a whole band collects all of
/// it (+1) and leaves it intact but relocated; pulling a relocated band
/// throws ConsumedEntity.
SingleResult run_single(const BandEntity& band, const Experiment& e, RandomStream& rng);

/// Simultaneous experiments; `ea` must be on side A and `eb` on side B
/// (InvalidExperiment otherwise). A collected fragment longer than L/2 gives
/// +1, anything else -1.
CoincidenceResult run_coincidence(const BandEntity& band, const Experiment& ea,
                                  const Experiment& eb, RandomStream& rng);

/// Produces the fresh band for trial `i`.
using BandFactory = std::function<BandEntity(std::uint64_t)>;

/// Mean of o_A o_B over `trials` coincidence runs, each on a fresh band.
/// Throws InvalidParameter for zero trials.
stats::ExpectationEstimate estimate_expectation(
    const BandFactory& factory, const Experiment& ea, const Experiment& eb,
    std::uint64_t trials, std::uint64_t seed,
    kernels::Execution exec = kernels::Execution::Parallel);

/// Exact expectation of o_A o_B for a freshly prepared band.
double analytic_expectation(const BandEntity& band, const Experiment& ea, const Experiment& eb);

struct UniformBand {
  double length = 1.0;
};

struct FixedBreakBand {
  double length = 1.0;
  double break_position = 1.0 / 3.0;
};

struct PreBrokenBand {
  double length = 1.0;
  double left_fragment = 1.0 / 3.0;
};

struct QuantumSinglet {
  UnitVector3 a;
  UnitVector3 a_prime;
  UnitVector3 b;
  UnitVector3 b_prime;

  /// Coplanar settings in the x-z plane with a, b, a', b' spaced by pi/4.
  static QuantumSinglet pi_over_4_chain();
};

using Scenario = std::variant<UniformBand, FixedBreakBand, PreBrokenBand, QuantumSinglet>;

/// Canonical scenario names: uniform-band, fixed-break-band, pre-broken-band,
/// quantum-singlet. Unknown names give std::nullopt.
std::optional<Scenario> scenario_from_name(const std::string& name);
std::string scenario_name(const Scenario& scenario);

struct ChshReport {
  stats::ExpectationEstimate e_ab;
  stats::ExpectationEstimate e_ab_prime;
  stats::ExpectationEstimate e_a_prime_b_prime;
  stats::ExpectationEstimate e_a_prime_b;
  double s_value = 0.0;

  /// sqrt of the summed squared standard errors.
  double combined_standard_error() const;
};

/// The four expectations (a,b), (a,b'), (a',b'), (a',b) and their CHSH value.
/// Bands map a -> Pull at A, a' -> Color at A, b -> Pull at B, b' -> Color at B.
/// trials == 0 gives the exact values with zero standard errors.
ChshReport chsh_scenario(const Scenario& scenario, std::uint64_t trials, std::uint64_t seed,
                         kernels::Execution exec = kernels::Execution::Parallel);

/// Deterministic local strategy: pre-assigned outcomes for all four settings.
struct LhvStrategy {
  Outcome a;
  Outcome a_prime;
  Outcome b;
  Outcome b_prime;
};

/// CHSH value of a deterministic local strategy.
double lhv_s_value(const LhvStrategy& strategy);

/// All 16 strategies in lexicographic order (+1 before -1).
std::array<LhvStrategy, 16> all_lhv_strategies();

/// Largest CHSH value reachable by a deterministic local strategy.
double lhv_maximum();

}  // namespace aerts::bell
