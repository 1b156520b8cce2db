#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <vector>

#include "nullpol/factorize.hpp"

// Batch kernels over independent inputs. `serial` is the reference; `omp`
// distributes items over OpenMP threads and must agree with it exactly.
namespace nullpol::kernels {

struct FactorizationOutcome {
  std::optional<klein::FactorizationResult> result;
  std::exception_ptr error;
};

namespace serial {

std::vector<FactorizationOutcome> factorize_batch(std::span<const klein::ProjTransform4> inputs, ScalarMode mode);
std::vector<Multivector> sandwich_batch(const Versor& g, std::span<const Multivector> xs);

template <class F>
void for_each_index(std::size_t n, F&& f) {
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace serial

namespace omp {

std::vector<FactorizationOutcome> factorize_batch(std::span<const klein::ProjTransform4> inputs, ScalarMode mode);
std::vector<Multivector> sandwich_batch(const Versor& g, std::span<const Multivector> xs);

/// f(i) for every i < n with dynamic scheduling; f must not throw.
template <class F>
void for_each_index(std::size_t n, F&& f) {
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) f(static_cast<std::size_t>(i));
}

int max_threads();

}  // namespace omp

}  // namespace nullpol::kernels
