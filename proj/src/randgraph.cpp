#include "starmoments/randgraph.hpp"

#include "starmoments/errors.hpp"
#include "starmoments/moments.hpp"
#include "starmoments/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>

namespace starmoments {

std::string_view to_string(GraphModel m)
{
    return m == GraphModel::ConfigurationModel ? "cm" : "uniform";
}

GraphModel parse_model(std::string_view text)
{
    if (text == "cm")
        return GraphModel::ConfigurationModel;
    if (text == "uniform")
        return GraphModel::Uniform;
    throw InvalidArgument("unknown model '" + std::string(text) + "' (expected cm or uniform)");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void check_config(const SamplerConfig& cfg)
{
    if (cfg.n < 1 || cfg.d < 1)
        throw InvalidArgument("sampler needs n >= 1 and d >= 1");
}

void check_trials(int trials)
{
    if (trials < 2)
        throw InvalidArgument("at least 2 trials are needed for a standard error");
}

struct Summary {
    double mean = 0.0;
    double std_error = 0.0;
};

Summary summarize(const std::vector<double>& xs)
{
    const double n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double x : xs)
        sum += x;
    const double mean = sum / n;
    double ss = 0.0;
    for (double x : xs)
        ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

Digraph sample_graph(const SamplerConfig& cfg, GraphModel model, std::uint64_t trial)
{
    if (model == GraphModel::Uniform)
        return sample_uniform_regular(cfg, trial);
    SamplerConfig c = cfg;
    c.seed = derive_seed(cfg.seed, trial, 0);
    return sample_configuration_model(c);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial, std::uint64_t attempt)
{
    return splitmix64(splitmix64(splitmix64(master) ^ trial) ^ attempt);
}

Digraph sample_configuration_model(const SamplerConfig& cfg)
{
    check_config(cfg);
    const std::size_t half_arcs = static_cast<std::size_t>(cfg.n) * static_cast<std::size_t>(cfg.d);
    std::vector<std::size_t> target(half_arcs);
    std::iota(target.begin(), target.end(), std::size_t{0});
    std::mt19937_64 engine(cfg.seed);
    std::shuffle(target.begin(), target.end(), engine);

    const auto n = static_cast<std::size_t>(cfg.n);
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(half_arcs);
    for (std::size_t h = 0; h < half_arcs; ++h)
        arcs.emplace_back(static_cast<int>(h % n), static_cast<int>(target[h] % n));
    return Digraph(cfg.n, arcs);
}

Digraph sample_uniform_regular(const SamplerConfig& cfg, std::uint64_t stream)
{
    check_config(cfg);
    if (cfg.n <= cfg.d)
        throw InfeasibleParameters("no simple " + std::to_string(cfg.d) +
                                   "-regular digraph on " + std::to_string(cfg.n) +
                                   " vertices (need n > d)");
    for (int a = 0; a < cfg.max_attempts; ++a) {
        SamplerConfig attempt = cfg;
        attempt.seed = derive_seed(cfg.seed, stream, static_cast<std::uint64_t>(a));
        Digraph g = sample_configuration_model(attempt);
        if (is_simple(g))
            return g;
    }
    throw AttemptsExhausted("no simple draw in " + std::to_string(cfg.max_attempts) +
                            " attempts (n=" + std::to_string(cfg.n) +
                            ", d=" + std::to_string(cfg.d) + ")");
}

ExperimentRecord monte_carlo_star_moment(const SamplerConfig& cfg, const Word& w, int trials,
                                         GraphModel model, unsigned threads)
{
    check_config(cfg);
    check_trials(trials);
    ExperimentRecord rec;
    rec.n = cfg.n;
    rec.d = cfg.d;
    rec.word = w;
    rec.trials = trials;
    rec.target = star_moment_formula(w, cfg.d);

    std::vector<double> values(static_cast<std::size_t>(trials));
    parallel_for(values.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            const Digraph g = sample_graph(cfg, model, t);
            values[t] = star_moment_trace(g, w).convert_to<double>() / cfg.n;
        }
    });
    const auto s = summarize(values);
    rec.mean = s.mean;
    rec.std_error = s.std_error;
    rec.within_3se = std::abs(rec.mean - rec.target.convert_to<double>()) <= 3.0 * rec.std_error;
    return rec;
}

CycleDensityRecord monte_carlo_cycle_density(const SamplerConfig& cfg, int j, int trials,
                                             GraphModel model, unsigned threads)
{
    check_config(cfg);
    check_trials(trials);
    if (j < 1)
        throw InvalidArgument("cycle length must be at least 1");
    if (j > 8)
        throw CapExceeded("cycle length for density experiments must be at most 8");
    std::vector<double> counts(static_cast<std::size_t>(trials));
    parallel_for(counts.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t)
            counts[t] = static_cast<double>(plain_cycle_count(sample_graph(cfg, model, t), j).count);
    });
    std::vector<double> densities;
    for (double c : counts)
        densities.push_back(c / cfg.n);
    const auto cs = summarize(counts);
    const auto ds = summarize(densities);
    return {cfg.n, cfg.d, j, trials, ds.mean, ds.std_error, cs.mean, cs.std_error};
}

std::vector<ExperimentRecord> convergence_experiment(int d, const Word& w, std::vector<int> sizes,
                                                     int trials, std::uint64_t seed,
                                                     GraphModel model, unsigned threads,
                                                     int max_attempts)
{
    std::sort(sizes.begin(), sizes.end());
    std::vector<ExperimentRecord> out;
    for (int n : sizes) {
        SamplerConfig cfg{n, d, seed, max_attempts};
        out.push_back(monte_carlo_star_moment(cfg, w, trials, model, threads));
    }
    return out;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records)
{
    out << "n,d,word,trials,mean,stderr,target,within_3se\n";
    char buf[64];
    for (const auto& r : records) {
        out << r.n << ',' << r.d << ',' << r.word.str() << ',' << r.trials << ',';
        std::snprintf(buf, sizeof buf, "%.6g", r.mean);
        out << buf << ',';
        std::snprintf(buf, sizeof buf, "%.6g", r.std_error);
        out << buf << ',' << r.target.str() << ',' << (r.within_3se ? "true" : "false") << '\n';
    }
}

} // namespace starmoments
