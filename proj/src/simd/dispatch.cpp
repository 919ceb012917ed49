#include <atomic>
#include <cstdlib>

#include "simd/kernels.hpp"
#include "zkrylov/errors.hpp"

namespace zkrylov {
namespace {

bool cpu_has_avx2() {
#if defined(ZKRYLOV_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (const char* env = std::getenv("ZKRYLOV_ISA")) {
    if (auto isa = parse_isa(env); isa && isa_supported(*isa)) return *isa;
  }
  return best_isa();
}

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{initial_isa()};
  return slot;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  return std::nullopt;
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2: return cpu_has_avx2();
  }
  return false;
}

Isa best_isa() { return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

Isa active_isa() { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw ParameterError("ISA not supported on this build/CPU: " + std::string(to_string(isa)));
  }
  active_slot().store(isa, std::memory_order_relaxed);
}

namespace detail {

const KernelTable& kernels_for(Isa isa) {
#if defined(ZKRYLOV_HAVE_AVX2)
  if (isa == Isa::avx2) return avx2_kernels();
#endif
  (void)isa;
  return scalar_kernels();
}

const KernelTable& active_kernels() { return kernels_for(active_isa()); }

}  // namespace detail
}  // namespace zkrylov
