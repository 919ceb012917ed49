#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "zkrylov/errors.hpp"
#include "zkrylov/io.hpp"

namespace zkrylov {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

std::size_t parse_size(std::string_view tok, std::size_t line_no, const char* what) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(tok) + "'", line_no);
  }
  return v;
}

double parse_real(std::string_view tok, std::size_t line_no) {
  // from_chars rejects a leading '+', which some writers emit.
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw ParseError("invalid numeric value '" + std::string(tok) + "'", line_no);
  }
  return v;
}

enum class Field { real, complex };
enum class Symmetry { general, symmetric };

}  // namespace

CooMatrix read_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw ParseError("empty input, expected %%MatrixMarket banner", 1);
  ++line_no;
  const auto banner = split_ws(line);
  if (banner.size() != 5 || lower(banner[0]) != "%%matrixmarket") {
    throw ParseError("missing or malformed %%MatrixMarket banner", line_no);
  }
  if (lower(banner[1]) != "matrix") throw ParseError("object must be 'matrix'", line_no);
  if (lower(banner[2]) != "coordinate") {
    throw ParseError("unsupported format '" + std::string(banner[2]) + "', only 'coordinate' is accepted", line_no);
  }
  Field field;
  const std::string f = lower(banner[3]);
  if (f == "real" || f == "integer") {
    field = Field::real;
  } else if (f == "complex") {
    field = Field::complex;
  } else {
    throw ParseError("unsupported field '" + std::string(banner[3]) + "'", line_no);
  }
  Symmetry symmetry;
  const std::string s = lower(banner[4]);
  if (s == "general") {
    symmetry = Symmetry::general;
  } else if (s == "symmetric") {
    symmetry = Symmetry::symmetric;
  } else {
    throw ParseError("unsupported symmetry '" + std::string(banner[4]) + "'", line_no);
  }

  // Size line, after comments.
  std::vector<std::string_view> tok;
  while (true) {
    if (!std::getline(in, line)) throw ParseError("missing size line", line_no + 1);
    ++line_no;
    if (line.starts_with('%') || is_blank(line)) continue;
    tok = split_ws(line);
    break;
  }
  if (tok.size() != 3) throw ParseError("size line must hold 'rows cols entries'", line_no);
  CooMatrix m;
  m.n_rows = parse_size(tok[0], line_no, "row count");
  m.n_cols = parse_size(tok[1], line_no, "column count");
  const std::size_t declared = parse_size(tok[2], line_no, "entry count");
  if (symmetry == Symmetry::symmetric && m.n_rows != m.n_cols) {
    throw ParseError("symmetric matrix must be square", line_no);
  }
  m.entries.reserve(symmetry == Symmetry::symmetric ? 2 * declared : declared);

  const std::size_t expected_tokens = field == Field::complex ? 4 : 3;
  std::size_t read = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.starts_with('%') || is_blank(line)) continue;
    if (read == declared) {
      throw ParseError("more entries than the declared " + std::to_string(declared), line_no);
    }
    tok = split_ws(line);
    if (tok.size() != expected_tokens) {
      throw ParseError("expected " + std::to_string(expected_tokens) + " fields, found " + std::to_string(tok.size()),
                       line_no);
    }
    const std::size_t i = parse_size(tok[0], line_no, "row index");
    const std::size_t j = parse_size(tok[1], line_no, "column index");
    if (i < 1 || i > m.n_rows || j < 1 || j > m.n_cols) {
      throw ParseError("index (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range", line_no);
    }
    Cplx v{parse_real(tok[2], line_no), field == Field::complex ? parse_real(tok[3], line_no) : 0.0};
    m.entries.push_back({i - 1, j - 1, v});
    if (symmetry == Symmetry::symmetric && i != j) m.entries.push_back({j - 1, i - 1, v});
    ++read;
  }
  if (read != declared) {
    throw ParseError("declared " + std::to_string(declared) + " entries but found " + std::to_string(read), line_no);
  }
  return m;
}

CooMatrix read_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_matrix_market(in);
}

void write_matrix_market(const CsrMatrix& a, std::ostream& out) {
  out << "%%MatrixMarket matrix coordinate complex general\n";
  out << a.rows() << ' ' << a.cols() << ' ' << a.nnz() << '\n';
  const auto ia = a.row_ptr();
  const auto ja = a.col_idx();
  const auto aa = a.values();
  char buf[128];
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = ia[r]; k < ia[r + 1]; ++k) {
      const int len = std::snprintf(buf, sizeof buf, "%zu %zu %.17g %.17g\n", r + 1, ja[k] + 1, aa[k].re, aa[k].im);
      out.write(buf, len);
    }
  }
  if (!out) throw IoError("write failed");
}

void write_matrix_market(const CsrMatrix& a, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_matrix_market(a, out);
  out.close();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

}  // namespace zkrylov
