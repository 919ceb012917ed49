#pragma once

// Finite-difference Helmholtz systems on boxes, -lap(u) - k^2 u = g with
// Dirichlet data on the whole boundary and k = 2 pi F / c.
//
// The box [0, L]^dim is split into `cells_per_axis` cells per axis; unknowns
// are the (cells_per_axis - 1)^dim interior nodes in lexicographic order with
// x varying fastest. Boundary values are moved to the right-hand side.

#include <array>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>

#include "zkrylov/cnum.hpp"
#include "zkrylov/sparse.hpp"
#include "zkrylov/vecops.hpp"

namespace zkrylov {

using GridPoint = std::array<double, 3>;  // unused coordinates are 0

struct HelmholtzProblem {
  int dim = 3;
  std::size_t cells_per_axis = 9;
  double domain_length = 1.0;  // meters
  double frequency = 50.0;     // Hz
  double velocity = 343.0;     // m/s
  Cplx dirichlet_value{0.0, 0.0};
  Cplx source{1.0, 0.0};

  // Optional overrides of the constant fields above.
  std::function<Cplx(const GridPoint&)> boundary_fn;
  std::function<Cplx(const GridPoint&)> source_fn;
  std::function<double(const GridPoint&)> velocity_fn;  // variable k(x)

  double wavenumber() const;
  double spacing() const { return domain_length / static_cast<double>(cells_per_axis); }
  std::size_t interior_per_axis() const { return cells_per_axis - 1; }
  std::size_t unknowns() const;

  /// Throws ParameterError for dim outside {1,2,3}, fewer than 3 cells, a
  /// non-positive length or a negative / non-finite wavenumber. k = 0 (the
  /// Poisson limit) is accepted.
  void validate() const;
};

struct HelmholtzSystem {
  CsrMatrix matrix;
  ZVector rhs;
};

/// Second-order central differences: (2 dim / h^2 - k^2) on the diagonal and
/// -1 / h^2 for each of the 2 dim neighbours.
HelmholtzSystem assemble(const HelmholtzProblem& p);

/// Coordinates of interior unknown `index`.
GridPoint grid_point(const HelmholtzProblem& p, std::size_t index);

struct ManufacturedSolution {
  ZVector exact_u;  // u*(x) = exp(i k x_1) at the interior nodes
  ZVector source;   // -lap(u*) - k^2 u* = 0 at the interior nodes
  HelmholtzProblem problem;  // copy of p with boundary data u* and source 0
};

/// Plane-wave verification case for the constant wavenumber of `p` (any
/// velocity_fn is dropped).
ManufacturedSolution manufactured_solution(const HelmholtzProblem& p);

/// key=value problem description; '#' starts a comment. Keys: dim, cells,
/// length, frequency, wavelength (sets frequency = velocity / wavelength),
/// velocity, dirichlet_re, dirichlet_im, source_re, source_im.
HelmholtzProblem parse_problem_config(std::istream& in);
HelmholtzProblem read_problem_config(const std::filesystem::path& path);

}  // namespace zkrylov
