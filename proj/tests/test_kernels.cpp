#include <doctest.h>

#include <random>
#include <vector>

#include "sb/kernels.hpp"

using namespace sb::kernels;

TEST_CASE("serial and omp power sums agree") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (std::size_t n : {1u, 7u, 1000u, 50000u}) {
        std::vector<double> x(n), w(n);
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = dist(rng);
            w[i] = std::abs(dist(rng)) + 0.1;
            sum += w[i];
        }
        for (auto& v : w) v /= sum;
        const auto a = centered_power_sums_serial(x, w, 0.37);
        const auto b = centered_power_sums_omp(x, w, 0.37);
        CHECK(a.s1 == doctest::Approx(b.s1).epsilon(1e-12));
        CHECK(a.s2 == doctest::Approx(b.s2).epsilon(1e-12));
        CHECK(a.s3 == doctest::Approx(b.s3).epsilon(1e-12));
        CHECK(a.s4 == doctest::Approx(b.s4).epsilon(1e-12));
    }
}

TEST_CASE("serial and omp matmul agree") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::size_t n : {1u, 3u, 17u, 65u}) {
        std::vector<cplx> a(n * n), b(n * n), c1(n * n), c2(n * n);
        for (auto& v : a) v = {dist(rng), dist(rng)};
        for (auto& v : b) v = {dist(rng), dist(rng)};
        matmul_serial(a.data(), b.data(), c1.data(), n);
        matmul_omp(a.data(), b.data(), c2.data(), n);
        for (std::size_t i = 0; i < n * n; ++i) {
            CHECK(c1[i].real() == doctest::Approx(c2[i].real()).epsilon(1e-12));
            CHECK(c1[i].imag() == doctest::Approx(c2[i].imag()).epsilon(1e-12));
        }
        const auto t1 = trace_of_product_serial(a.data(), b.data(), n);
        const auto t2 = trace_of_product_omp(a.data(), b.data(), n);
        CHECK(t1.real() == doctest::Approx(t2.real()).epsilon(1e-12));
        CHECK(t1.imag() == doctest::Approx(t2.imag()).epsilon(1e-12));
    }
}

TEST_CASE("trace of product matches explicit product trace") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const std::size_t n = 9;
    std::vector<cplx> a(n * n), b(n * n), c(n * n);
    for (auto& v : a) v = {dist(rng), dist(rng)};
    for (auto& v : b) v = {dist(rng), dist(rng)};
    matmul(a.data(), b.data(), c.data(), n);
    cplx tr{};
    for (std::size_t i = 0; i < n; ++i) tr += c[i * n + i];
    const auto t = trace_of_product(a.data(), b.data(), n);
    CHECK(t.real() == doctest::Approx(tr.real()).epsilon(1e-12));
    CHECK(t.imag() == doctest::Approx(tr.imag()).epsilon(1e-12));
}
