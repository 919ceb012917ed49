#pragma once

// File formats:
//
//  * Matrix Market coordinate text ("%%MatrixMarket matrix coordinate
//    {real|integer|complex} {general|symmetric}"), 1-based indices. Symmetric
//    files are expanded to full storage on read; writes always produce
//    "complex general" with 17 significant digits per value.
//  * Binary dumps, little-endian. Vector: u64 length, then (re, im) f64 pairs.
//    CSR: u64 n, u64 nz, IA (n+1 x u64), JA (nz x u64), AA (nz x (re, im)),
//    zero-based indices. Binary CSR dumps are square.

#include <filesystem>
#include <iosfwd>

#include "zkrylov/sparse.hpp"
#include "zkrylov/vecops.hpp"

namespace zkrylov {

CooMatrix read_matrix_market(std::istream& in);
CooMatrix read_matrix_market(const std::filesystem::path& path);

void write_matrix_market(const CsrMatrix& a, std::ostream& out);
void write_matrix_market(const CsrMatrix& a, const std::filesystem::path& path);

void write_vector_binary(const ZVector& v, std::ostream& out);
void write_vector_binary(const ZVector& v, const std::filesystem::path& path);
ZVector read_vector_binary(std::istream& in);
ZVector read_vector_binary(const std::filesystem::path& path);

void write_csr_binary(const CsrMatrix& a, std::ostream& out);
void write_csr_binary(const CsrMatrix& a, const std::filesystem::path& path);
CsrMatrix read_csr_binary(std::istream& in);
CsrMatrix read_csr_binary(const std::filesystem::path& path);

/// Reads a square matrix, choosing the format by extension: ".bin" is a
/// binary CSR dump, anything else is Matrix Market.
CsrMatrix load_matrix(const std::filesystem::path& path);

}  // namespace zkrylov
