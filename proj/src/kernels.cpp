#include "nullpol/kernels.hpp"

#include <omp.h>

namespace nullpol::kernels {
namespace {

FactorizationOutcome factorize_one(const klein::ProjTransform4& t, ScalarMode mode) {
  FactorizationOutcome out;
  try {
    out.result = klein::factorize_matrix(t, mode);
  } catch (...) {
    out.error = std::current_exception();
  }
  return out;
}

template <class Loop>
std::vector<FactorizationOutcome> factorize_with(Loop loop, std::span<const klein::ProjTransform4> inputs,
                                                 ScalarMode mode) {
  std::vector<FactorizationOutcome> out(inputs.size());
  loop(inputs.size(), [&](std::size_t i) { out[i] = factorize_one(inputs[i], mode); });
  return out;
}

template <class Loop>
std::vector<Multivector> sandwich_with(Loop loop, const Versor& g, std::span<const Multivector> xs) {
  std::vector<Multivector> out(xs.size(), Multivector(g.value().algebra()));
  const Multivector ag = main_involution(g.value());
  const Multivector cg = conjugate(g.value());
  loop(xs.size(), [&](std::size_t i) { out[i] = ag * xs[i] * cg; });
  return out;
}

}  // namespace

namespace serial {

std::vector<FactorizationOutcome> factorize_batch(std::span<const klein::ProjTransform4> inputs, ScalarMode mode) {
  return factorize_with([](std::size_t n, auto&& f) { for_each_index(n, f); }, inputs, mode);
}

std::vector<Multivector> sandwich_batch(const Versor& g, std::span<const Multivector> xs) {
  return sandwich_with([](std::size_t n, auto&& f) { for_each_index(n, f); }, g, xs);
}

}  // namespace serial

namespace omp {

std::vector<FactorizationOutcome> factorize_batch(std::span<const klein::ProjTransform4> inputs, ScalarMode mode) {
  return factorize_with([](std::size_t n, auto&& f) { for_each_index(n, f); }, inputs, mode);
}

std::vector<Multivector> sandwich_batch(const Versor& g, std::span<const Multivector> xs) {
  return sandwich_with([](std::size_t n, auto&& f) { for_each_index(n, f); }, g, xs);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace omp

}  // namespace nullpol::kernels
