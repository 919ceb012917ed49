#pragma once

namespace zkrylov {

/// Parallel width used by vector kernels and SpMV. Defaults to 1. Values
/// below 1 are clamped to 1; without OpenMP the setting is recorded but
/// kernels stay sequential.
void set_num_threads(int n);
int num_threads();

bool openmp_enabled();

}  // namespace zkrylov
