// Independent brute-force reference computations for the tests. Everything
// here works by direct summation in extended precision and must stay
// independent of the library's computation paths.
#pragma once

#include <cmath>
#include <random>
#include <span>
#include <vector>

namespace oracle {

struct Moments {
    double mean = 0.0;
    double mu2 = 0.0;
    double mu3 = 0.0;
    double mu4 = 0.0;
    double mu2p = 0.0;
    double mu3p = 0.0;
    double mu4p = 0.0;
};

inline Moments direct_moments(std::span<const double> xs, std::span<const double> ws) {
    long double mean = 0.0L;
    for (std::size_t i = 0; i < xs.size(); ++i)
        mean += static_cast<long double>(ws[i]) * xs[i];
    long double c2 = 0.0L, c3 = 0.0L, c4 = 0.0L, r2 = 0.0L, r3 = 0.0L, r4 = 0.0L;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const long double w = ws[i];
        const long double x = xs[i];
        const long double d = x - mean;
        c2 += w * d * d;
        c3 += w * d * d * d;
        c4 += w * d * d * d * d;
        r2 += w * x * x;
        r3 += w * x * x * x;
        r4 += w * x * x * x * x;
    }
    Moments m;
    m.mean = static_cast<double>(mean);
    m.mu2 = static_cast<double>(c2);
    m.mu3 = static_cast<double>(c3);
    m.mu4 = static_cast<double>(c4);
    m.mu2p = static_cast<double>(r2);
    m.mu3p = static_cast<double>(r3);
    m.mu4p = static_cast<double>(r4);
    return m;
}

inline Moments direct_moments(std::span<const double> xs) {
    std::vector<double> w(xs.size(), 1.0 / static_cast<double>(xs.size()));
    return direct_moments(xs, w);
}

struct RandomSample {
    std::vector<double> values;
    std::vector<double> weights;
    double m = 0.0;
    double M = 0.0;
};

inline RandomSample random_weighted_sample(std::mt19937_64& rng, int min_n = 2, int max_n = 12) {
    std::uniform_int_distribution<int> nd(min_n, max_n);
    std::uniform_real_distribution<double> loc(-10.0, 10.0);
    std::uniform_real_distribution<double> len(1e-3, 20.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    RandomSample s;
    const int n = nd(rng);
    s.m = loc(rng);
    s.M = s.m + len(rng);
    std::uniform_real_distribution<double> val(s.m, s.M);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        s.values.push_back(val(rng));
        const double w = unit(rng) + 1e-6;
        s.weights.push_back(w);
        sum += w;
    }
    for (auto& w : s.weights) w /= sum;
    return s;
}

inline RandomSample random_equal_sample(std::mt19937_64& rng, int min_n = 2, int max_n = 12) {
    RandomSample s = random_weighted_sample(rng, min_n, max_n);
    const double p = 1.0 / static_cast<double>(s.values.size());
    for (auto& w : s.weights) w = p;
    return s;
}

/// Random real symmetric matrix with entries in [-scale, scale].
inline std::vector<double> random_symmetric(std::mt19937_64& rng, int n, double scale = 5.0) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = dist(rng);
            a[static_cast<std::size_t>(i) * n + j] = v;
            a[static_cast<std::size_t>(j) * n + i] = v;
        }
    return a;
}

}  // namespace oracle
