#pragma once

#include "starmoments/bigint.hpp"
#include "starmoments/digraph.hpp"
#include "starmoments/words.hpp"

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace starmoments {

/// Pseudo-random engine behind every sampler; recorded in output metadata.
inline constexpr std::string_view kGeneratorName = "mt19937_64";
/// Seed derivation scheme; see derive_seed.
inline constexpr std::string_view kSeedScheme = "splitmix64(master,trial,attempt)";

struct SamplerConfig {
    int n = 1;
    int d = 1;
    std::uint64_t seed = 0;
    int max_attempts = 1000;
};

enum class GraphModel { ConfigurationModel, Uniform };

std::string_view to_string(GraphModel m);
/// Accepts "cm" and "uniform"; throws InvalidArgument otherwise.
GraphModel parse_model(std::string_view text);

/// Seed for attempt `attempt` of trial `trial` under `master`: three rounds
/// of the splitmix64 finalizer, folding in one input per round.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial, std::uint64_t attempt);

/// d-regular multidigraph from a uniformly random bijection between the nd
/// outgoing and nd incoming half-arcs (vertex i owns half-arcs i + p n,
/// p = 0..d-1). The engine is seeded with cfg.seed directly.
Digraph sample_configuration_model(const SamplerConfig& cfg);

/// Uniform simple d-regular digraph by rejection: attempt a draws the
/// configuration model with seed derive_seed(cfg.seed, stream, a).
/// Throws InfeasibleParameters when n <= d and AttemptsExhausted after
/// cfg.max_attempts non-simple draws.
Digraph sample_uniform_regular(const SamplerConfig& cfg, std::uint64_t stream = 0);

/// One row of a convergence table.
struct ExperimentRecord {
    int n = 0;
    int d = 0;
    Word word;
    int trials = 0;
    double mean = 0.0;
    double std_error = 0.0;
    BigInt target;
    bool within_3se = false;
};

struct CycleDensityRecord {
    int n = 0;
    int d = 0;
    int length = 0;
    int trials = 0;
    double mean_density = 0.0;  ///< mean of c_j(G) / n
    double density_std_error = 0.0;
    double mean_count = 0.0;    ///< mean of c_j(G)
    double count_std_error = 0.0;
};

/// Mean and standard error of Tr A^w / n over `trials` independent graphs;
/// trial t uses derive_seed(cfg.seed, t, .). Output does not depend on
/// `threads`.
ExperimentRecord monte_carlo_star_moment(const SamplerConfig& cfg, const Word& w, int trials,
                                         GraphModel model, unsigned threads = 1);

/// Mean and standard error of c_j(G) / n and of c_j(G). Requires j <= 8.
CycleDensityRecord monte_carlo_cycle_density(const SamplerConfig& cfg, int j, int trials,
                                             GraphModel model, unsigned threads = 1);

/// One record per size, in ascending n, all sharing the master seed.
std::vector<ExperimentRecord> convergence_experiment(int d, const Word& w, std::vector<int> sizes,
                                                     int trials, std::uint64_t seed,
                                                     GraphModel model, unsigned threads = 1,
                                                     int max_attempts = 1000);

/// Header "n,d,word,trials,mean,stderr,target,within_3se"; floats with 6
/// significant digits.
void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

} // namespace starmoments
