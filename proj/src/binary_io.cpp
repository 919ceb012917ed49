#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <limits>

#include "zkrylov/errors.hpp"
#include "zkrylov/io.hpp"

namespace zkrylov {
namespace {

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> b;
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  out.write(b.data(), b.size());
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> b;
  if (!in.read(reinterpret_cast<char*>(b.data()), b.size())) throw IoError("truncated binary input");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

void put_cplx(std::ostream& out, Cplx z) {
  put_u64(out, std::bit_cast<std::uint64_t>(z.re));
  put_u64(out, std::bit_cast<std::uint64_t>(z.im));
}

Cplx get_cplx(std::istream& in) {
  const double re = std::bit_cast<double>(get_u64(in));
  const double im = std::bit_cast<double>(get_u64(in));
  return {re, im};
}

// Guards allocations against corrupt headers.
std::size_t checked_count(std::uint64_t v, const char* what) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 40;
  if (v > kLimit || v > std::numeric_limits<std::size_t>::max()) {
    throw IoError(std::string("implausible ") + what + " in binary header");
  }
  return static_cast<std::size_t>(v);
}

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& w) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  w(out);
  out.close();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

std::ifstream open_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

void write_vector_binary(const ZVector& v, std::ostream& out) {
  put_u64(out, v.size());
  for (const Cplx& z : v) put_cplx(out, z);
  if (!out) throw IoError("write failed");
}

void write_vector_binary(const ZVector& v, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_vector_binary(v, out); });
}

ZVector read_vector_binary(std::istream& in) {
  const std::size_t n = checked_count(get_u64(in), "vector length");
  ZVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = get_cplx(in);
  return v;
}

ZVector read_vector_binary(const std::filesystem::path& path) {
  auto in = open_binary(path);
  return read_vector_binary(in);
}

void write_csr_binary(const CsrMatrix& a, std::ostream& out) {
  if (!a.is_square()) throw DimensionError("binary CSR dump requires a square matrix");
  put_u64(out, a.rows());
  put_u64(out, a.nnz());
  for (std::size_t p : a.row_ptr()) put_u64(out, p);
  for (std::size_t j : a.col_idx()) put_u64(out, j);
  for (const Cplx& z : a.values()) put_cplx(out, z);
  if (!out) throw IoError("write failed");
}

void write_csr_binary(const CsrMatrix& a, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_csr_binary(a, out); });
}

CsrMatrix read_csr_binary(std::istream& in) {
  const std::size_t n = checked_count(get_u64(in), "dimension");
  const std::size_t nz = checked_count(get_u64(in), "nonzero count");
  std::vector<std::size_t> ia(n + 1);
  std::vector<std::size_t> ja(nz);
  std::vector<Cplx> aa(nz);
  for (auto& p : ia) p = checked_count(get_u64(in), "row pointer");
  for (auto& j : ja) j = checked_count(get_u64(in), "column index");
  for (auto& z : aa) z = get_cplx(in);
  return CsrMatrix::from_arrays(n, n, std::move(ia), std::move(ja), std::move(aa));
}

CsrMatrix read_csr_binary(const std::filesystem::path& path) {
  auto in = open_binary(path);
  return read_csr_binary(in);
}

CsrMatrix load_matrix(const std::filesystem::path& path) {
  CsrMatrix a = path.extension() == ".bin" ? read_csr_binary(path) : coo_to_csr(read_matrix_market(path));
  if (!a.is_square()) {
    throw DimensionError("matrix in " + path.string() + " is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", expected square");
  }
  return a;
}

}  // namespace zkrylov
