#pragma once

// Level-1 complex vector kernels. In-place kernels overwrite their last
// operand, like the BLAS routines they mirror; length checks happen before
// any element is written.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "zkrylov/cnum.hpp"

namespace zkrylov {

class ZVector {
 public:
  ZVector() = default;
  explicit ZVector(std::size_t n, Cplx fill = {}) : data_(n, fill) {}
  ZVector(std::initializer_list<Cplx> values) : data_(values) {}
  explicit ZVector(std::vector<Cplx> values) : data_(std::move(values)) {}

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  Cplx* data() noexcept { return data_.data(); }
  const Cplx* data() const noexcept { return data_.data(); }

  Cplx& operator[](std::size_t i) noexcept { return data_[i]; }
  const Cplx& operator[](std::size_t i) const noexcept { return data_[i]; }

  std::span<Cplx> span() noexcept { return data_; }
  std::span<const Cplx> span() const noexcept { return data_; }

  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  const std::vector<Cplx>& values() const noexcept { return data_; }

  void fill(Cplx value);

  friend bool operator==(const ZVector&, const ZVector&) = default;

 private:
  std::vector<Cplx> data_;
};

enum class ReductionMode { deterministic_sequential, blocked_parallel };

/// How dot products and norms are summed.
///
/// deterministic_sequential is a single left-to-right loop on the scalar
/// path. blocked_parallel splits the vector into `block_size` chunks, computes
/// one partial sum per chunk (possibly concurrently, with the active ISA) and
/// then adds the partial sums in ascending block order. The result depends on
/// block_size and ISA but never on the thread count.
struct ReductionPlan {
  std::size_t block_size = 4096;
  ReductionMode mode = ReductionMode::blocked_parallel;

  static constexpr ReductionPlan sequential() {
    return {4096, ReductionMode::deterministic_sequential};
  }

  /// Throws ParameterError unless block_size is a power of two in [64, 65536].
  void validate() const;
};

enum class Conjugate { no, yes };

void zassign(ZVector& dst, const ZVector& src);
void zscal(Cplx alpha, ZVector& x);
void zaxpy(Cplx alpha, const ZVector& x, ZVector& y);
void zaxmy(const ZVector& x, ZVector& y);

/// sum_i cbar(x[i]) * y[i], with cbar = conj when `conjugate` is yes.
Cplx zdot(const ZVector& x, const ZVector& y, Conjugate conjugate, const ReductionPlan& plan = {});

double znorm2(const ZVector& x, const ReductionPlan& plan = {});

// Copying wrappers.
ZVector scaled(Cplx alpha, ZVector x);
ZVector axpy(Cplx alpha, const ZVector& x, ZVector y);
ZVector elementwise_product(const ZVector& x, ZVector y);

}  // namespace zkrylov
