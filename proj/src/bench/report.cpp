#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "zkrylov/bench.hpp"
#include "zkrylov/errors.hpp"

namespace zkrylov {
namespace {

constexpr std::string_view kCsvHeader = "op,size,reps,time_ms,gflops,iterations,residual,converged";

std::string fmt_exact(double v) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string fmt_fixed(double v, int digits) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string fmt_sci(double v) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.3e", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::uint64_t parse_u64(const std::string& s, std::size_t line) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw ParseError("invalid integer '" + s + "'", line);
  return v;
}

double parse_f64(const std::string& s, std::size_t line) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw ParseError("invalid number '" + s + "'", line);
  return v;
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "md" || name == "markdown") return ReportFormat::markdown;
  return std::nullopt;
}

void emit_report(std::span<const BenchRecord> records, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::csv) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
      out << r.op << ',' << r.size << ',' << r.reps << ',' << fmt_exact(r.mean_time_ms) << ','
          << fmt_exact(r.gflops) << ',';
      if (r.iterations) out << *r.iterations;
      out << ',';
      if (r.residual) out << fmt_exact(*r.residual);
      out << ',';
      if (r.converged) out << (*r.converged ? "true" : "false");
      out << '\n';
    }
  } else {
    out << "| op | h | reps | time (ms) | Gflops | reference cpu time (ms) | #iter | residual | converged |\n";
    out << "|----|--:|-----:|----------:|-------:|------------------------:|------:|---------:|:---------:|\n";
    for (const auto& r : records) {
      out << "| " << r.op << " | " << r.size << " | " << r.reps << " | " << fmt_fixed(r.mean_time_ms, 4) << " | "
          << fmt_fixed(r.gflops, 3) << " | " << (r.reference_ms ? fmt_fixed(*r.reference_ms, 2) : "") << " | "
          << (r.iterations ? std::to_string(*r.iterations) : "") << " | " << (r.residual ? fmt_sci(*r.residual) : "")
          << " | " << (r.converged ? (*r.converged ? "yes" : "no") : "") << " |";
      if (!r.note.empty()) out << ' ' << r.note;
      out << '\n';
    }
  }
  if (!out) throw IoError("report write failed");
}

std::vector<BenchRecord> parse_csv_report(std::istream& in) {
  std::vector<BenchRecord> records;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line) || line != kCsvHeader) throw ParseError("missing CSV header", 1);
  ++line_no;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_commas(line);
    if (f.size() != 8) throw ParseError("expected 8 fields", line_no);
    BenchRecord r;
    r.op = f[0];
    r.size = parse_u64(f[1], line_no);
    r.reps = parse_u64(f[2], line_no);
    r.mean_time_ms = parse_f64(f[3], line_no);
    r.gflops = parse_f64(f[4], line_no);
    if (!f[5].empty()) r.iterations = parse_u64(f[5], line_no);
    if (!f[6].empty()) r.residual = parse_f64(f[6], line_no);
    if (f[7] == "true") {
      r.converged = true;
    } else if (f[7] == "false") {
      r.converged = false;
    } else if (!f[7].empty()) {
      throw ParseError("converged must be true or false", line_no);
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace zkrylov
