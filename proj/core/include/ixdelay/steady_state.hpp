#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "ixdelay/ensemble.hpp"
#include "ixdelay/histogram.hpp"

namespace ixdelay {

struct SteadyStateOptions {
  std::size_t particles = 10000;
  double tol = 0.05;
  std::size_t max_iterations = 200;
  std::uint64_t seed = 1;
  double bin_width = 0.1;
  unsigned threads = 1;
  /// Consecutive sub-tolerance L1 distances required to declare convergence.
  std::size_t consecutive = 3;
  /// Window (iterations) of the mean-delay drift test for divergence.
  std::size_t divergence_window = 50;
};

struct IterationRecord {
  std::size_t iteration = 0;
  double l1 = std::numeric_limits<double>::quiet_NaN();  ///< vs previous iteration; NaN at iteration 1
  double mean_total_delay = 0.0;
  double mean_max_delay = 0.0;
};

struct SteadyStateRun {
  ParticleEnsemble ensemble;
  Histogram last_histogram;
  std::size_t iterations_used = 0;
  bool converged = false;
  /// Set when the run did not converge, no L1 distance in the last
  /// divergence window fell below tol, and the mean max-delay grew by more
  /// than Δd + Δs over that window: congestion is forming.
  bool diverging = false;
  std::vector<IterationRecord> log;
};

/// Propagates one event per iteration from `init_ensemble` until the L1
/// distance between consecutive histograms stays below `tol` for
/// `consecutive` iterations, or `max_iterations` is reached. An infinite
/// `tol` converges at the first check. Throws std::invalid_argument for tol ≤ 0.
SteadyStateRun run_to_steady_state(const Intersection& spec, Policy policy, const SteadyStateOptions& options);

/// Rolls `iterations` more events over a converged ensemble and returns the
/// per-event delays, in (event, particle) order.
std::vector<DelaySample> sample_steady_state(ParticleEnsemble& ensemble, std::size_t iterations,
                                             unsigned threads = 1);

struct MeanEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t count = 0;
};

/// Mean and batch-means standard error of the sample delays, batching by
/// event so that each batch holds whole iterations.
MeanEstimate mean_delay(const std::vector<DelaySample>& samples, std::size_t particles);

struct ErgodicEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t burn_in = 0;
  std::size_t events = 0;
};

/// Single-trajectory time average of the per-event delay. The first
/// min(1000, events / 2) events are discarded as burn-in; the standard
/// error comes from 20 batch means over the rest. Throws
/// std::invalid_argument for events = 0.
ErgodicEstimate ergodic_mean_delay(const Intersection& spec, Policy policy, std::size_t events,
                                   std::uint64_t seed);

}  // namespace ixdelay
