#include "imflow/kernels/kernels.hpp"

#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <cstring>

#include "imflow/log.hpp"

namespace imflow::kernels {

namespace scalar {

double plogp_sum(std::span<const double> mass) {
    double acc = 0.0;
    for (double m : mass) {
        if (m >= DBL_MIN) acc += m * std::log2(m);
    }
    return acc;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

}  // namespace scalar

namespace {

struct Dispatch {
    Backend backend;
    double (*plogp_sum)(std::span<const double>);
    double (*dot)(std::span<const double>, std::span<const double>);
    void (*axpy)(double, std::span<const double>, std::span<double>);
};

constexpr Dispatch kScalar{Backend::scalar, scalar::plogp_sum, scalar::dot, scalar::axpy};

#if defined(IMFLOW_HAVE_AVX2)
constexpr Dispatch kAvx2{Backend::avx2, avx2::plogp_sum, avx2::dot, avx2::axpy};
#endif

bool cpu_has_avx2() {
#if defined(IMFLOW_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Dispatch pick_initial() {
    const char* env = std::getenv("IMFLOW_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return kScalar;
#if defined(IMFLOW_HAVE_AVX2)
    if (cpu_has_avx2()) {
        if (env && std::strcmp(env, "avx2") != 0 && std::strcmp(env, "") != 0) {
            log::warn("IMFLOW_KERNELS=%s not recognized, using avx2", env);
        }
        return kAvx2;
    }
#endif
    if (env && std::strcmp(env, "avx2") == 0) {
        log::warn("IMFLOW_KERNELS=avx2 requested but unavailable, using scalar");
    }
    return kScalar;
}

Dispatch& dispatch() {
    static Dispatch d = pick_initial();
    return d;
}

}  // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "unknown";
}

Backend active_backend() { return dispatch().backend; }

bool backend_supported(Backend b) {
    if (b == Backend::scalar) return true;
    return cpu_has_avx2();
}

bool set_backend(Backend b) {
    if (!backend_supported(b)) return false;
    if (b == Backend::scalar) {
        dispatch() = kScalar;
        return true;
    }
#if defined(IMFLOW_HAVE_AVX2)
    dispatch() = kAvx2;
    return true;
#else
    return false;
#endif
}

double plogp_sum(std::span<const double> mass) { return dispatch().plogp_sum(mass); }

double dot(std::span<const double> a, std::span<const double> b) {
    return dispatch().dot(a, b);
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    dispatch().axpy(alpha, x, y);
}

}  // namespace imflow::kernels
