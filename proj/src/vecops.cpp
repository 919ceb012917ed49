#include "zkrylov/vecops.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "parallel_for.hpp"
#include "simd/kernels.hpp"
#include "zkrylov/errors.hpp"

namespace zkrylov {
namespace {

void require_same_length(const ZVector& a, const ZVector& b, const char* op) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(op) + ": length mismatch (" + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
  }
}

}  // namespace

void ZVector::fill(Cplx value) {
  for (auto& v : data_) v = value;
}

void ReductionPlan::validate() const {
  if (block_size < 64 || block_size > 65536 || !std::has_single_bit(block_size)) {
    throw ParameterError("reduction block_size must be a power of two in [64, 65536], got " +
                         std::to_string(block_size));
  }
}

void zassign(ZVector& dst, const ZVector& src) {
  require_same_length(dst, src, "zassign");
  const auto& k = detail::active_kernels();
  detail::for_chunks(src.size(), detail::kElementwiseChunk, [&](std::size_t, std::size_t b, std::size_t e) {
    k.assign(src.data() + b, dst.data() + b, e - b);
  });
}

void zscal(Cplx alpha, ZVector& x) {
  const auto& k = detail::active_kernels();
  detail::for_chunks(x.size(), detail::kElementwiseChunk,
                     [&](std::size_t, std::size_t b, std::size_t e) { k.scal(alpha, x.data() + b, e - b); });
}

void zaxpy(Cplx alpha, const ZVector& x, ZVector& y) {
  require_same_length(x, y, "zaxpy");
  const auto& k = detail::active_kernels();
  detail::for_chunks(x.size(), detail::kElementwiseChunk, [&](std::size_t, std::size_t b, std::size_t e) {
    k.axpy(alpha, x.data() + b, y.data() + b, e - b);
  });
}

void zaxmy(const ZVector& x, ZVector& y) {
  require_same_length(x, y, "zaxmy");
  const auto& k = detail::active_kernels();
  detail::for_chunks(x.size(), detail::kElementwiseChunk, [&](std::size_t, std::size_t b, std::size_t e) {
    k.axmy(x.data() + b, y.data() + b, e - b);
  });
}

// Two-phase reduction: one partial per block, then an ascending-order pass
// over the partials.
Cplx zdot(const ZVector& x, const ZVector& y, Conjugate conjugate, const ReductionPlan& plan) {
  require_same_length(x, y, "zdot");
  plan.validate();
  const bool conj_first = conjugate == Conjugate::yes;
  if (plan.mode == ReductionMode::deterministic_sequential) {
    return detail::scalar_kernels().dot(x.data(), y.data(), x.size(), conj_first);
  }
  const auto& k = detail::active_kernels();
  const std::size_t n = x.size();
  std::vector<Cplx> partial((n + plan.block_size - 1) / plan.block_size);
  detail::for_chunks(n, plan.block_size, [&](std::size_t c, std::size_t b, std::size_t e) {
    partial[c] = k.dot(x.data() + b, y.data() + b, e - b, conj_first);
  });
  Cplx sum{};
  for (const Cplx& p : partial) sum = cadd(sum, p);
  return sum;
}

double znorm2(const ZVector& x, const ReductionPlan& plan) {
  plan.validate();
  if (plan.mode == ReductionMode::deterministic_sequential) {
    return std::sqrt(detail::scalar_kernels().sumsq(x.data(), x.size()));
  }
  const auto& k = detail::active_kernels();
  const std::size_t n = x.size();
  std::vector<double> partial((n + plan.block_size - 1) / plan.block_size);
  detail::for_chunks(n, plan.block_size, [&](std::size_t c, std::size_t b, std::size_t e) {
    partial[c] = k.sumsq(x.data() + b, e - b);
  });
  double sum = 0.0;
  for (double p : partial) sum += p;
  return std::sqrt(sum);
}

ZVector scaled(Cplx alpha, ZVector x) {
  zscal(alpha, x);
  return x;
}

ZVector axpy(Cplx alpha, const ZVector& x, ZVector y) {
  zaxpy(alpha, x, y);
  return y;
}

ZVector elementwise_product(const ZVector& x, ZVector y) {
  zaxmy(x, y);
  return y;
}

}  // namespace zkrylov
