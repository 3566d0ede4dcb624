#pragma once

#include <cstddef>
#include <span>

// Arithmetic inner loops shared by the entropy estimator and the MLP.
// Each kernel has a scalar reference implementation and, on x86-64 builds,
// an AVX2 variant. The active variant is chosen once at startup from cpuid
// (override with IMFLOW_KERNELS=scalar|avx2 or set_backend); all later calls
// in a process go through the same variant, which keeps runs reproducible.

namespace imflow::kernels {

enum class Backend { scalar = 0, avx2 = 1 };

const char* backend_name(Backend b);
Backend active_backend();
bool backend_supported(Backend b);
// Returns false (and leaves the dispatch untouched) if b is not supported.
bool set_backend(Backend b);

// Sum of m * log2(m) over the span. Entries below DBL_MIN (including zeros
// and negatives) contribute nothing, matching the 0*log 0 = 0 convention.
double plogp_sum(std::span<const double> mass);

// Dot product; a and b must have equal length.
double dot(std::span<const double> a, std::span<const double> b);

// y += alpha * x; x and y must have equal length.
void axpy(double alpha, std::span<const double> x, std::span<double> y);

// Reference implementations, callable directly for equivalence tests.
namespace scalar {
double plogp_sum(std::span<const double> mass);
double dot(std::span<const double> a, std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
}  // namespace scalar

#if defined(IMFLOW_HAVE_AVX2)
namespace avx2 {
double plogp_sum(std::span<const double> mass);
double dot(std::span<const double> a, std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
}  // namespace avx2
#endif

}  // namespace imflow::kernels
