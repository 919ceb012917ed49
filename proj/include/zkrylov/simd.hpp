#pragma once

// Runtime selection between the scalar reference kernels and the vectorized
// variants. Elementwise kernels and SpMV produce bit-identical results under
// every ISA; reductions (zdot, znorm2 in blocked mode) sum in a different
// order per ISA and agree to rounding.

#include <optional>
#include <string_view>

namespace zkrylov {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

/// True when the variant was compiled in and the CPU can execute it.
bool isa_supported(Isa isa);

/// Widest supported ISA.
Isa best_isa();

/// ISA used by all kernels. Initialized to best_isa(), or to the value of the
/// ZKRYLOV_ISA environment variable ("scalar" / "avx2") when it names a
/// supported ISA.
Isa active_isa();

/// Throws ParameterError when `isa` is not supported.
void set_active_isa(Isa isa);

class ScopedIsa {
 public:
  explicit ScopedIsa(Isa isa) : previous_(active_isa()) { set_active_isa(isa); }
  ~ScopedIsa() { set_active_isa(previous_); }
  ScopedIsa(const ScopedIsa&) = delete;
  ScopedIsa& operator=(const ScopedIsa&) = delete;

 private:
  Isa previous_;
};

}  // namespace zkrylov
