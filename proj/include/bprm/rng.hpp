#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

namespace bprm {

// Stateless 64-bit mixer (splitmix64 finalizer). Used to derive independent
// seeds and as the step function of the counter-based generator below.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return mix64(master ^ mix64(stream ^ 0xa5a5a5a5a5a5a5a5ULL));
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return mix64(derive_seed(master, a) ^ mix64(b ^ 0x5ee5ee5ee5ee5ee5ULL));
}

// Counter-based stream: the draw sequence is a pure function of the key, so
// per-individual updates give identical results for any thread schedule.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : state_(key) {}

    std::uint64_t next_u64() { return mix64(state_++); }

    // Open-interval (0,1) uniform.
    double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    double exponential() { return -std::log(uniform()); }

private:
    std::uint64_t state_;
};

// Sequential generator owned by one chain (or the tempering controller).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Open-interval (0,1) uniform.
    double uniform() { return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Inclusive range.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(std::uniform_int_distribution<long>(0, hi - lo)(gen_));
    }

    double normal(double mean = 0.0, double sd = 1.0) {
        const double u1 = uniform();
        const double u2 = uniform();
        return mean + sd * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    double exponential() { return -std::log(uniform()); }

    // Rate parameterization: mean = shape / rate.
    double gamma(double shape, double rate) {
        std::gamma_distribution<double> d(shape, 1.0 / rate);
        return d(gen_);
    }

    double beta(double a, double b) {
        const double x = gamma(a, 1.0);
        const double y = gamma(b, 1.0);
        const double s = x + y;
        if (s <= 0.0) return a / (a + b);
        return std::clamp(x / s, 1e-300, 1.0 - 1e-12);
    }

    std::vector<double> dirichlet(std::span<const double> conc) {
        std::vector<double> out(conc.size());
        double total = 0.0;
        for (std::size_t m = 0; m < conc.size(); ++m) {
            out[m] = gamma(conc[m], 1.0);
            total += out[m];
        }
        if (total <= 0.0) {
            std::fill(out.begin(), out.end(), 1.0 / static_cast<double>(out.size()));
            return out;
        }
        for (double& v : out) v /= total;
        return out;
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

}  // namespace bprm
