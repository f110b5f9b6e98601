#include "ipls/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <thread>

namespace ipls {

namespace {

constexpr std::size_t kChunk = 4096;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

struct Partial {
    RealVector lo, hi;
    std::size_t singular = 0;
};

Partial run_chunk(const ParametricLinearSystem& sys, std::size_t chunk, std::size_t begin,
                  std::size_t end, std::size_t vertex_samples, std::uint64_t seed) {
    const std::size_t n = sys.dimension();
    const std::size_t K = sys.parameter_count();
    const RealVector mid = sys.box_mid();
    const RealVector rad = sys.box_rad();
    Partial out{RealVector(n, std::numeric_limits<double>::infinity()),
                RealVector(n, -std::numeric_limits<double>::infinity()), 0};

    std::mt19937_64 gen(seed + chunk * kGolden);
    RealVector p(K);
    for (std::size_t s = begin; s < end; ++s) {
        if (s < vertex_samples) {
            for (std::size_t k = 0; k < K; ++k) p[k] = ((s >> k) & 1U) ? mid[k] + rad[k] : mid[k] - rad[k];
        } else {
            for (std::size_t k = 0; k < K; ++k) {
                const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
                p[k] = mid[k] + (2.0 * u - 1.0) * rad[k];
            }
        }
        try {
            const auto [A, a] = sys.evaluate_at(p);
            const RealVector x = solve(A, a);
            for (std::size_t i = 0; i < n; ++i) {
                out.lo[i] = std::min(out.lo[i], x[i]);
                out.hi[i] = std::max(out.hi[i], x[i]);
            }
        } catch (const Singular&) {
            ++out.singular;
        }
    }
    return out;
}

}  // namespace

std::string to_string(SampleStrategy s) {
    return s == SampleStrategy::Uniform ? "uniform" : "vertices-plus-uniform";
}

SampleStrategy sample_strategy_from_string(const std::string& s) {
    if (s == "uniform") return SampleStrategy::Uniform;
    if (s == "vertices-plus-uniform") return SampleStrategy::VerticesPlusUniform;
    throw InvalidArgument("unknown sampling strategy '" + s + "'");
}

SampleHull sample_hull(const ParametricLinearSystem& sys, std::size_t count, std::uint64_t seed,
                       SampleStrategy strategy) {
    if (count == 0) throw InvalidArgument("sample_hull: count must be positive");
    const std::size_t K = sys.parameter_count();
    std::size_t vertex_samples = 0;
    if (strategy == SampleStrategy::VerticesPlusUniform)
        vertex_samples = K >= 63 ? count : std::min<std::size_t>(count, std::size_t{1} << K);

    const std::size_t chunks = (count + kChunk - 1) / kChunk;
    std::vector<Partial> parts(chunks);
    auto work = [&](std::size_t c) {
        parts[c] = run_chunk(sys, c, c * kChunk, std::min(count, (c + 1) * kChunk), vertex_samples, seed);
    };
    const std::size_t workers = std::min<std::size_t>(
        chunks, std::max<std::size_t>(1, std::min<std::size_t>(8, std::thread::hardware_concurrency())));
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) work(c);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t c = w; c < chunks; c += workers) work(c);
            });
        for (auto& t : pool) t.join();
    }

    SampleHull res;
    res.sample_count = count;
    res.seed = seed;
    const std::size_t n = sys.dimension();
    RealVector lo(n, std::numeric_limits<double>::infinity());
    RealVector hi(n, -std::numeric_limits<double>::infinity());
    for (const auto& part : parts) {
        res.singular_count += part.singular;
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], part.lo[i]);
            hi[i] = std::max(hi[i], part.hi[i]);
        }
    }
    if (res.singular_count * 100 > count)
        throw OracleError("sample_hull: " + std::to_string(res.singular_count) + " of " +
                          std::to_string(count) + " samples are singular");
    for (std::size_t i = 0; i < n; ++i) res.hull_lower_bound.emplace_back(lo[i], hi[i]);
    return res;
}

}  // namespace ipls
