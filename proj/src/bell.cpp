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

#include "aerts/bell.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "aerts/error.hpp"

namespace aerts::bell {

bool BandEntity::is_relocated() const {
  const auto* w = std::get_if<Whole>(&state_);
  return w != nullptr && w->held_by.has_value();
}

BandEntity BandEntity::whole(BandBreakProfile profile, double length, BandColor color) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw InvalidParameter("band length must be positive");
  }
  if (const auto* fixed = std::get_if<FixedBreak>(&profile)) {
    if (!(fixed->position > 0.0 && fixed->position < length)) {
      throw InvalidParameter("fixed break position " + std::to_string(fixed->position) +
                             " is not strictly inside the band");
    }
  }
  return BandEntity(length, color, Whole{profile, std::nullopt});
}

BandEntity BandEntity::broken(double left, double length, BandColor color) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw InvalidParameter("band length must be positive");
  }
  if (!(left >= 0.0 && left <= length)) {
    throw InvalidParameter("left fragment " + std::to_string(left) + " outside [0, L]");
  }
  return BandEntity(length, color, Broken{left, length - left});
}

struct BandTransitions {
  static BandEntity relocate(const BandEntity& band, const Whole& w, Side holder) {
    return BandEntity(band.length_, band.color_, Whole{w.profile, holder});
  }
  static BandEntity split(const BandEntity& band, double left) {
    return BandEntity(band.length_, band.color_, Broken{left, band.length_ - left});
  }
};

namespace {

Outcome color_outcome(const BandEntity& band) {
  return outcome_if(band.color() == BandColor::Red);
}

// B's fragment is L - left; "L - left > L/2" is evaluated as "left < L/2"
// so rounding in the subtraction cannot move the comparison.
Outcome fragment_outcome(const BandEntity& band, double left, Side side) {
  const double half = 0.5 * band.length();
  return outcome_if(side == Side::A ? left > half : left < half);
}

double break_position(const BandEntity& band, const BandBreakProfile& profile,
                      RandomStream& rng) {
  if (const auto* fixed = std::get_if<FixedBreak>(&profile)) return fixed->position;
  return band.length() * rng.uniform();
}

void require_unconsumed(const BandEntity& band) {
  if (band.is_relocated()) {
    throw ConsumedEntity("band was already pulled away intact; it cannot be pulled again");
  }
}

}  // namespace

SingleResult run_single(const BandEntity& band, const Experiment& e, RandomStream& /*rng*/) {
  if (e.kind == ExperimentKind::Color) return {color_outcome(band), band};

  if (const auto* w = std::get_if<Whole>(&band.state())) {
    require_unconsumed(band);
    // The whole length L > L/2 ends up in the puller's hands.
    return {Outcome::Plus, BandTransitions::relocate(band, *w, e.side)};
  }
  return {fragment_outcome(band, band.fragments().left, e.side), band};
}

CoincidenceResult run_coincidence(const BandEntity& band, const Experiment& ea,
                                  const Experiment& eb, RandomStream& rng) {
  if (ea.side != Side::A || eb.side != Side::B) {
    throw InvalidExperiment("coincidence needs an experiment at A and one at B");
  }
  const bool pull_a = ea.kind == ExperimentKind::Pull;
  const bool pull_b = eb.kind == ExperimentKind::Pull;

  if (pull_a && pull_b) {
    if (const auto* w = std::get_if<Whole>(&band.state())) {
      require_unconsumed(band);
      const double left = break_position(band, w->profile, rng);
      BandEntity after = BandTransitions::split(band, left);
      return {fragment_outcome(after, left, Side::A), fragment_outcome(after, left, Side::B),
              std::move(after)};
    }
    const double left = band.fragments().left;
    return {fragment_outcome(band, left, Side::A), fragment_outcome(band, left, Side::B), band};
  }

  // At most one pull: the other side only looks, which never disturbs the band.
  if (pull_a) {
    SingleResult r = run_single(band, ea, rng);
    return {r.outcome, color_outcome(band), std::move(r.post_state)};
  }
  if (pull_b) {
    SingleResult r = run_single(band, eb, rng);
    return {color_outcome(band), r.outcome, std::move(r.post_state)};
  }
  return {color_outcome(band), color_outcome(band), band};
}

stats::ExpectationEstimate estimate_expectation(const BandFactory& factory,
                                                const Experiment& ea, const Experiment& eb,
                                                std::uint64_t trials, std::uint64_t seed,
                                                kernels::Execution exec) {
  if (trials == 0) throw InvalidParameter("expectation estimate needs at least one trial");
  if (ea.side != Side::A || eb.side != Side::B) {
    throw InvalidExperiment("coincidence needs an experiment at A and one at B");
  }
  {
    // Surface configuration errors here; exceptions cannot leave the parallel loop.
    RandomStream probe(seed);
    (void)run_coincidence(factory(0), ea, eb, probe);
  }
  const auto sum = kernels::sum_trials(exec, trials, seed, [&](std::uint64_t i, RandomStream& rng) {
    const CoincidenceResult r = run_coincidence(factory(i), ea, eb, rng);
    return value(r.outcome_a) * value(r.outcome_b);
  });
  return stats::make_pm1_expectation(sum, trials);
}

double analytic_expectation(const BandEntity& band, const Experiment& ea, const Experiment& eb) {
  const auto* w = std::get_if<Whole>(&band.state());
  const bool both_pull = ea.kind == ExperimentKind::Pull && eb.kind == ExperimentKind::Pull;
  if (w != nullptr && both_pull && !band.is_relocated() &&
      std::holds_alternative<UniformBreak>(w->profile)) {
    // The break point is uniform on [0, L]: almost surely exactly one side
    // collects more than L/2.
    return -1.0;
  }
  // Every other configuration is deterministic and consumes no randomness.
  RandomStream unused(0);
  const CoincidenceResult r = run_coincidence(band, ea, eb, unused);
  return static_cast<double>(value(r.outcome_a) * value(r.outcome_b));
}

QuantumSinglet QuantumSinglet::pi_over_4_chain() {
  constexpr double q = std::numbers::pi / 4.0;
  auto in_xz_plane = [](double t) { return UnitVector3::from_polar(t, 0.0); };
  return {in_xz_plane(0.0), in_xz_plane(2.0 * q), in_xz_plane(q), in_xz_plane(3.0 * q)};
}

std::optional<Scenario> scenario_from_name(const std::string& name) {
  if (name == "uniform-band") return UniformBand{};
  if (name == "fixed-break-band") return FixedBreakBand{};
  if (name == "pre-broken-band") return PreBrokenBand{};
  if (name == "quantum-singlet") return QuantumSinglet::pi_over_4_chain();
  return std::nullopt;
}

std::string scenario_name(const Scenario& scenario) {
  struct Namer {
    std::string operator()(const UniformBand&) const { return "uniform-band"; }
    std::string operator()(const FixedBreakBand&) const { return "fixed-break-band"; }
    std::string operator()(const PreBrokenBand&) const { return "pre-broken-band"; }
    std::string operator()(const QuantumSinglet&) const { return "quantum-singlet"; }
  };
  return std::visit(Namer{}, scenario);
}

double ChshReport::combined_standard_error() const {
  double v = 0.0;
  for (const auto* e : {&e_ab, &e_ab_prime, &e_a_prime_b_prime, &e_a_prime_b}) {
    v += e->standard_error * e->standard_error;
  }
  return std::sqrt(v);
}

namespace {

BandEntity band_for(const Scenario& scenario) {
  if (const auto* s = std::get_if<UniformBand>(&scenario)) {
    return BandEntity::whole(UniformBreak{}, s->length);
  }
  if (const auto* s = std::get_if<FixedBreakBand>(&scenario)) {
    return BandEntity::whole(FixedBreak{s->break_position}, s->length);
  }
  const auto& s = std::get<PreBrokenBand>(scenario);
  return BandEntity::broken(s.left_fragment, s.length);
}

ChshReport assemble(std::array<stats::ExpectationEstimate, 4> e) {
  ChshReport r{e[0], e[1], e[2], e[3], 0.0};
  r.s_value = chsh_value(e[0].value, e[1].value, e[2].value, e[3].value);
  return r;
}

stats::ExpectationEstimate exact(double value) { return {value, 0, 0.0}; }

}  // namespace

ChshReport chsh_scenario(const Scenario& scenario, std::uint64_t trials, std::uint64_t seed,
                         kernels::Execution exec) {
  if (const auto* q = std::get_if<QuantumSinglet>(&scenario)) {
    const std::array<std::pair<UnitVector3, UnitVector3>, 4> settings{
        {{q->a, q->b}, {q->a, q->b_prime}, {q->a_prime, q->b_prime}, {q->a_prime, q->b}}};
    std::array<stats::ExpectationEstimate, 4> e;
    for (std::size_t k = 0; k < settings.size(); ++k) {
      const auto& [c, d] = settings[k];
      e[k] = trials == 0 ? exact(singlet_expectation(c, d))
                         : kernels::singlet_correlation(c, d, trials, derive_seed(seed, k), exec);
    }
    return assemble(e);
  }

  const BandEntity band = band_for(scenario);
  const std::array<std::pair<Experiment, Experiment>, 4> settings{
      {{kPullA, kPullB}, {kPullA, kColorB}, {kColorA, kColorB}, {kColorA, kPullB}}};
  const BandFactory fresh = [&band](std::uint64_t) { return band; };
  std::array<stats::ExpectationEstimate, 4> e;
  for (std::size_t k = 0; k < settings.size(); ++k) {
    const auto& [ea, eb] = settings[k];
    e[k] = trials == 0 ? exact(analytic_expectation(band, ea, eb))
                       : estimate_expectation(fresh, ea, eb, trials, derive_seed(seed, k), exec);
  }
  return assemble(e);
}

double lhv_s_value(const LhvStrategy& s) {
  const int a = value(s.a), ap = value(s.a_prime), b = value(s.b), bp = value(s.b_prime);
  return chsh_value(a * b, a * bp, ap * bp, ap * b);
}

std::array<LhvStrategy, 16> all_lhv_strategies() {
  std::array<LhvStrategy, 16> out{};
  for (unsigned bits = 0; bits < 16; ++bits) {
    auto pick = [bits](unsigned k) { return outcome_if(((bits >> (3 - k)) & 1U) == 0); };
    out[bits] = {pick(0), pick(1), pick(2), pick(3)};
  }
  return out;
}

double lhv_maximum() {
  double best = 0.0;
  for (const LhvStrategy& s : all_lhv_strategies()) best = std::max(best, lhv_s_value(s));
  return best;
}

}  // namespace aerts::bell
