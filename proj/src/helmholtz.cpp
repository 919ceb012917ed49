#include "zkrylov/helmholtz.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <string>

#include "zkrylov/errors.hpp"

namespace zkrylov {

double HelmholtzProblem::wavenumber() const { return 2.0 * std::numbers::pi * frequency / velocity; }

std::size_t HelmholtzProblem::unknowns() const {
  std::size_t n = 1;
  for (int d = 0; d < dim; ++d) n *= interior_per_axis();
  return n;
}

void HelmholtzProblem::validate() const {
  if (dim < 1 || dim > 3) throw ParameterError("dim must be 1, 2 or 3");
  if (cells_per_axis < 3) throw ParameterError("cells_per_axis must be at least 3");
  if (!(domain_length > 0.0) || !std::isfinite(domain_length)) {
    throw ParameterError("domain length must be positive and finite");
  }
  const double k = wavenumber();
  if (!std::isfinite(k) || k < 0.0) throw ParameterError("wavenumber 2 pi F / c must be finite and non-negative");
}

GridPoint grid_point(const HelmholtzProblem& p, std::size_t index) {
  const std::size_t m = p.interior_per_axis();
  const double h = p.spacing();
  GridPoint x{0.0, 0.0, 0.0};
  for (int d = 0; d < p.dim; ++d) {
    x[d] = static_cast<double>(index % m + 1) * h;
    index /= m;
  }
  return x;
}

namespace {

Cplx boundary_value(const HelmholtzProblem& p, const GridPoint& x) {
  return p.boundary_fn ? p.boundary_fn(x) : p.dirichlet_value;
}

Cplx source_value(const HelmholtzProblem& p, const GridPoint& x) {
  return p.source_fn ? p.source_fn(x) : p.source;
}

double local_wavenumber(const HelmholtzProblem& p, const GridPoint& x) {
  if (!p.velocity_fn) return p.wavenumber();
  const double c = p.velocity_fn(x);
  const double k = 2.0 * std::numbers::pi * p.frequency / c;
  if (!std::isfinite(k)) throw ParameterError("velocity field yields a non-finite wavenumber");
  return k;
}

}  // namespace

HelmholtzSystem assemble(const HelmholtzProblem& p) {
  p.validate();
  const std::size_t m = p.interior_per_axis();
  const std::size_t n = p.unknowns();
  const double h = p.spacing();
  const double inv_h2 = 1.0 / (h * h);
  std::array<std::size_t, 3> stride{1, m, m * m};

  std::vector<std::size_t> row_ptr;
  std::vector<std::size_t> col_idx;
  std::vector<Cplx> values;
  row_ptr.reserve(n + 1);
  col_idx.reserve(n * (2 * p.dim + 1));
  values.reserve(n * (2 * p.dim + 1));
  row_ptr.push_back(0);
  ZVector rhs(n);

  for (std::size_t row = 0; row < n; ++row) {
    std::array<std::size_t, 3> ijk{0, 0, 0};
    std::size_t rest = row;
    for (int d = 0; d < p.dim; ++d) {
      ijk[d] = rest % m;
      rest /= m;
    }
    const GridPoint x = grid_point(p, row);
    const double k = local_wavenumber(p, x);
    Cplx b = source_value(p, x);

    // Lower neighbours in descending axis order, then the centre, then upper
    // neighbours in ascending order: columns come out sorted.
    for (int d = p.dim - 1; d >= 0; --d) {
      if (ijk[d] > 0) {
        col_idx.push_back(row - stride[d]);
        values.push_back({-inv_h2, 0.0});
      } else {
        GridPoint xb = x;
        xb[d] = 0.0;
        b = cadd(b, cscale(inv_h2, boundary_value(p, xb)));
      }
    }
    col_idx.push_back(row);
    values.push_back({2.0 * p.dim * inv_h2 - k * k, 0.0});
    for (int d = 0; d < p.dim; ++d) {
      if (ijk[d] + 1 < m) {
        col_idx.push_back(row + stride[d]);
        values.push_back({-inv_h2, 0.0});
      } else {
        GridPoint xb = x;
        xb[d] = p.domain_length;
        b = cadd(b, cscale(inv_h2, boundary_value(p, xb)));
      }
    }
    row_ptr.push_back(col_idx.size());
    rhs[row] = b;
  }
  return {CsrMatrix::from_arrays(n, n, std::move(row_ptr), std::move(col_idx), std::move(values)), std::move(rhs)};
}

ManufacturedSolution manufactured_solution(const HelmholtzProblem& p) {
  p.validate();
  const double k = p.wavenumber();
  auto plane_wave = [k](const GridPoint& x) { return Cplx{std::cos(k * x[0]), std::sin(k * x[0])}; };

  ManufacturedSolution out;
  out.problem = p;
  out.problem.velocity_fn = nullptr;
  out.problem.boundary_fn = plane_wave;
  out.problem.source_fn = [](const GridPoint&) { return Cplx{0.0, 0.0}; };
  const std::size_t n = p.unknowns();
  out.exact_u = ZVector(n);
  out.source = ZVector(n);
  for (std::size_t i = 0; i < n; ++i) out.exact_u[i] = plane_wave(grid_point(p, i));
  return out;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, std::size_t line) {
  double out = 0.0;
  const char* first = v.data();
  if (!v.empty() && v.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) throw ParseError("invalid number '" + v + "'", line);
  return out;
}

std::size_t to_size(const std::string& v, std::size_t line) {
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) throw ParseError("invalid integer '" + v + "'", line);
  return out;
}

}  // namespace

HelmholtzProblem parse_problem_config(std::istream& in) {
  HelmholtzProblem p;
  std::optional<double> wavelength;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", line_no);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "dim") {
      p.dim = static_cast<int>(to_size(value, line_no));
    } else if (key == "cells") {
      p.cells_per_axis = to_size(value, line_no);
    } else if (key == "length") {
      p.domain_length = to_double(value, line_no);
    } else if (key == "frequency") {
      p.frequency = to_double(value, line_no);
    } else if (key == "wavelength") {
      wavelength = to_double(value, line_no);
    } else if (key == "velocity") {
      p.velocity = to_double(value, line_no);
    } else if (key == "dirichlet_re") {
      p.dirichlet_value.re = to_double(value, line_no);
    } else if (key == "dirichlet_im") {
      p.dirichlet_value.im = to_double(value, line_no);
    } else if (key == "source_re") {
      p.source.re = to_double(value, line_no);
    } else if (key == "source_im") {
      p.source.im = to_double(value, line_no);
    } else {
      throw ParseError("unknown key '" + key + "'", line_no);
    }
  }
  if (wavelength) p.frequency = p.velocity / *wavelength;
  p.validate();
  return p;
}

HelmholtzProblem read_problem_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_problem_config(in);
}

}  // namespace zkrylov
