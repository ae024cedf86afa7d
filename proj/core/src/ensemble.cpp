#include "ixdelay/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace ixdelay {

ParticleEnsemble::ParticleEnsemble(Intersection spec, Policy policy, std::size_t particles,
                                   std::uint64_t seed)
    : spec_(std::move(spec)), policy_(policy), seed_(seed) {
  if (particles == 0) throw std::invalid_argument("ensemble needs at least one particle");
  if (spec_.delta_s() > spec_.delta_d()) throw std::invalid_argument("ensemble needs delta_s <= delta_d");
  data_.assign(particles * spec_.lane_count(), -spec_.delta_d());
  streams_.reserve(particles);
  for (std::size_t p = 0; p < particles; ++p) streams_.push_back(RandomStream::derive(seed, p));
}

std::span<const double> ParticleEnsemble::particle(std::size_t p) const {
  if (p >= size()) throw std::out_of_range("particle index out of range");
  return std::span<const double>(data_).subspan(p * lane_count(), lane_count());
}

std::span<double> ParticleEnsemble::particle(std::size_t p) {
  if (p >= size()) throw std::out_of_range("particle index out of range");
  return std::span<double>(data_).subspan(p * lane_count(), lane_count());
}

DelayVector ParticleEnsemble::delay_vector(std::size_t p) const {
  const auto row = particle(p);
  return DelayVector(std::vector<double>(row.begin(), row.end()));
}

ParticleEnsemble init_ensemble(std::size_t particles, const Intersection& spec, Policy policy,
                               std::uint64_t seed) {
  ParticleEnsemble ensemble(spec, policy, particles, seed);
  const std::size_t k_count = spec.lane_count();
  std::size_t last_positive = 0;
  for (std::size_t k = 0; k < k_count; ++k) {
    if (spec.rate(Lane::from_index(k)) > 0.0) last_positive = k;
  }
  std::size_t next = 0;
  for (std::size_t k = 0; k < k_count; ++k) {
    const double share = spec.lane_probability(Lane::from_index(k)) * static_cast<double>(particles);
    std::size_t count = static_cast<std::size_t>(std::floor(share + 1e-9));
    if (k == last_positive) count = particles - next;
    count = std::min(count, particles - next);
    for (std::size_t p = next; p < next + count; ++p) ensemble.particle(p)[k] = 0.0;
    next += count;
    if (k == last_positive) break;
  }
  return ensemble;
}

namespace {

struct ChunkResult {
  std::uint64_t fallbacks = 0;
};

void advance_chunk(ParticleEnsemble& ensemble, std::span<double> data, std::span<RandomStream> streams,
                   std::size_t first, std::size_t steps, std::size_t start_iteration,
                   std::vector<DelaySample>* samples, ChunkResult& result) {
  const Intersection& spec = ensemble.spec();
  const std::size_t k_count = spec.lane_count();
  const std::size_t n = ensemble.size();
  const double dd = spec.delta_d();
  const double ds = spec.delta_s();
  const bool fo = ensemble.policy() == Policy::fo;

  for (std::size_t local = 0; local < streams.size(); ++local) {
    const std::size_t p = first + local;
    RandomStream& rng = streams[local];
    double* row = data.data() + local * k_count;
    for (std::size_t step = 0; step < steps; ++step) {
      const ArrivalEvent ev = sample_event(rng, spec);
      double delay = 0.0;
      std::uint8_t region = RegionLabel::kGeneral;
      if (k_count == 2) {
        const std::size_t s = ev.lane.index();
        const double e = row[s];
        const double o = row[1 - s];
        const PairStep next = fo ? fo_pair_step(e, o, ev.gap, dd, ds) : fifo_pair_step(e, o, ev.gap, dd, ds);
        delay = next.ego + next.other - std::max(o - ev.gap, -dd);
        row[s] = next.ego;
        row[1 - s] = next.other;
        region = next.region;
        if (region == RegionLabel::kUncovered) ++result.fallbacks;
      } else {
        const DelayVector before(std::vector<double>(row, row + k_count));
        const DelayVector after = fo ? fo_step_replay(before, ev, spec) : fifo_step_general(before, ev, spec);
        delay = state_event_delay(before, after, ev, spec);
        std::copy(after.values().begin(), after.values().end(), row);
      }
      if (samples != nullptr) {
        (*samples)[step * n + p] = {start_iteration + step + 1, p, delay, {ensemble.policy(), region}};
      }
    }
  }
}

}  // namespace

void propagate(ParticleEnsemble& ensemble, std::size_t steps, const PropagateOptions& options) {
  if (steps == 0) {
    if (options.samples != nullptr) options.samples->clear();
    return;
  }
  const std::size_t n = ensemble.size();
  const std::size_t k_count = ensemble.lane_count();
  if (options.samples != nullptr) options.samples->assign(steps * n, DelaySample{});

  const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, n);
  std::vector<ChunkResult> results(workers);
  auto run = [&](std::size_t w) {
    const std::size_t first = n * w / workers;
    const std::size_t last = n * (w + 1) / workers;
    advance_chunk(ensemble, std::span<double>(ensemble.data_).subspan(first * k_count, (last - first) * k_count),
                  std::span<RandomStream>(ensemble.streams_).subspan(first, last - first), first, steps,
                  ensemble.iteration_, options.samples, results[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (const auto& r : results) ensemble.fallbacks_ += r.fallbacks;
  ensemble.iteration_ += steps;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double mean_total_delay(const ParticleEnsemble& ensemble) {
  std::vector<double> totals(ensemble.size());
  for (std::size_t p = 0; p < ensemble.size(); ++p) {
    const auto row = ensemble.particle(p);
    totals[p] = pairwise_sum(row);
  }
  return pairwise_sum(totals) / static_cast<double>(ensemble.size());
}

double mean_max_delay(const ParticleEnsemble& ensemble) {
  std::vector<double> maxima(ensemble.size());
  for (std::size_t p = 0; p < ensemble.size(); ++p) {
    const auto row = ensemble.particle(p);
    maxima[p] = *std::max_element(row.begin(), row.end());
  }
  return pairwise_sum(maxima) / static_cast<double>(ensemble.size());
}

double fraction_with_max_at(const ParticleEnsemble& ensemble, double value, double tolerance) {
  std::size_t hits = 0;
  for (std::size_t p = 0; p < ensemble.size(); ++p) {
    const auto row = ensemble.particle(p);
    if (std::abs(*std::max_element(row.begin(), row.end()) - value) <= tolerance) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(ensemble.size());
}

double fraction_lane_at_most(const ParticleEnsemble& ensemble, Lane lane, double value) {
  if (lane.index() >= ensemble.lane_count()) throw std::out_of_range("lane out of range");
  std::size_t hits = 0;
  for (std::size_t p = 0; p < ensemble.size(); ++p) {
    if (ensemble.particle(p)[lane.index()] <= value) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(ensemble.size());
}

}  // namespace ixdelay
