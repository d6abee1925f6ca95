//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file csv.cpp
//---------------------------------------------------------------------------//
#include "dephasim/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dephasim/errors.hpp"

namespace dephasim {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) {
    return "";
  }
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<double> parse_row(const std::string& line, std::size_t expected,
                              const std::filesystem::path& path,
                              std::size_t line_no) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t end = line.find(',', start);
    if (end == std::string::npos) {
      end = line.size();
    }
    const std::string cell = trim(line.substr(start, end - start));
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
      throw IoError(path.string() + ":" + std::to_string(line_no) +
                    ": cannot parse '" + cell + "' as a number");
    }
    out.push_back(v);
    if (end == line.size()) {
      break;
    }
    start = end + 1;
  }
  if (out.size() != expected) {
    throw IoError(path.string() + ":" + std::to_string(line_no) + ": expected " +
                  std::to_string(expected) + " columns, got " +
                  std::to_string(out.size()));
  }
  return out;
}

std::vector<std::vector<double>> read_table(const std::filesystem::path& path,
                                            const std::string& header,
                                            std::size_t columns) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::string line;
  if (!std::getline(in, line) || trim(line) != header) {
    throw IoError(path.string() + ": expected header '" + header + "'");
  }
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) {
      continue;
    }
    rows.push_back(parse_row(trim(line), columns, path, line_no));
  }
  if (rows.empty()) {
    throw IoError(path.string() + ": no data rows");
  }
  return rows;
}

void write_lines(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << body;
  if (!out) {
    throw IoError("write failed for " + path.string());
  }
}

}  // namespace

std::string csv_double(double v) {
  char buf[40];
  const int n = std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

void write_distribution_csv(const std::filesystem::path& path,
                            const ComplexFreqDistribution& dist) {
  std::ostringstream body;
  body << "u,p,theta\n";
  for (std::size_t j = 0; j < dist.size(); ++j) {
    body << csv_double(dist.u[j]) << ',' << csv_double(dist.p[j]) << ','
         << csv_double(dist.theta[j]) << '\n';
  }
  write_lines(path, body.str());
}

ComplexFreqDistribution read_distribution_csv(const std::filesystem::path& path) {
  ComplexFreqDistribution dist;
  for (const auto& row : read_table(path, "u,p,theta", 3)) {
    dist.u.push_back(row[0]);
    dist.p.push_back(row[1]);
    dist.theta.push_back(row[2]);
  }
  return dist;
}

void write_trace_csv(const std::filesystem::path& path,
                     const DecoherenceTrace& trace) {
  std::ostringstream body;
  body << "d,re_kappa,im_kappa,abs_kappa\n";
  for (std::size_t m = 0; m < trace.size(); ++m) {
    body << csv_double(trace.d[m]) << ',' << csv_double(trace.kappa[m].real())
         << ',' << csv_double(trace.kappa[m].imag()) << ','
         << csv_double(std::abs(trace.kappa[m])) << '\n';
  }
  write_lines(path, body.str());
}

DecoherenceTrace read_trace_csv(const std::filesystem::path& path) {
  DecoherenceTrace trace;
  for (const auto& row : read_table(path, "d,re_kappa,im_kappa,abs_kappa", 4)) {
    trace.d.push_back(row[0]);
    trace.kappa.emplace_back(row[1], row[2]);
  }
  return trace;
}

void write_target_csv(const std::filesystem::path& path,
                      const DesignTarget& target) {
  std::ostringstream body;
  body << "d,re,im\n";
  for (std::size_t m = 0; m < target.size(); ++m) {
    body << csv_double(target.d[m]) << ',' << csv_double(target.target[m].real())
         << ',' << csv_double(target.target[m].imag()) << '\n';
  }
  write_lines(path, body.str());
}

DesignTarget read_target_csv(const std::filesystem::path& path) {
  DesignTarget target;
  for (const auto& row : read_table(path, "d,re,im", 3)) {
    target.d.push_back(row[0]);
    target.target.emplace_back(row[1], row[2]);
  }
  return target;
}

void write_measurement_csv(const std::filesystem::path& path,
                           const std::vector<MeasurementRecord>& records) {
  std::ostringstream body;
  body << "d,abs_kappa_true,abs_kappa_est,sigma\n";
  for (const auto& r : records) {
    body << csv_double(r.d) << ',' << csv_double(r.abs_kappa_true) << ','
         << csv_double(r.abs_kappa_est) << ',' << csv_double(r.sigma) << '\n';
  }
  write_lines(path, body.str());
}

std::pair<std::vector<double>, std::vector<double>> read_spectral_table_csv(
    const std::filesystem::path& path) {
  std::vector<double> omega;
  std::vector<double> j;
  for (const auto& row : read_table(path, "omega,J", 2)) {
    omega.push_back(row[0]);
    j.push_back(row[1]);
  }
  return {omega, j};
}

}  // namespace dephasim
