// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "symspace/matrix_io.hpp"

#include <charconv>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <system_error>

namespace symspace::io {

namespace {

struct Line {
  int number;
  std::vector<double> values;
};

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<double> split_numbers(const std::string& text, int line) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != ',' && text[end] != ' ' && text[end] != '\t' &&
           text[end] != '\r') {
      ++end;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
    if (ec != std::errc() || ptr != text.data() + end) {
      parse_error(line, "invalid number '" + text.substr(pos, end - pos) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    lines.push_back({number, split_numbers(text, number)});
  }
  return lines;
}

int header_count(const Line& line, double value, const char* what) {
  if (value != static_cast<int>(value) || value < 0) {
    parse_error(line.number, std::string(what) + " must be a nonnegative integer");
  }
  return static_cast<int>(value);
}

std::vector<Mat> read_blocks(const std::vector<Line>& lines, int rows, int cols) {
  if ((lines.size() - 1) % rows != 0) {
    parse_error(lines.back().number, "incomplete matrix block");
  }
  std::vector<Mat> blocks;
  for (std::size_t start = 1; start < lines.size(); start += rows) {
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
      const Line& line = lines[start + r];
      if (static_cast<int>(line.values.size()) != cols) {
        parse_error(line.number, "expected " + std::to_string(cols) + " entries, got " +
                                     std::to_string(line.values.size()));
      }
      for (int c = 0; c < cols; ++c) m(r, c) = line.values[c];
    }
    blocks.push_back(std::move(m));
  }
  return blocks;
}

void write_row(std::ostream& out, const Mat& m, Eigen::Index r, const char* sep) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    if (c > 0) out << sep;
    out << m(r, c);
  }
  out << '\n';
}

}  // namespace

SigMatrixSet read_sig_matrices(std::istream& in) {
  const std::vector<Line> lines = read_lines(in);
  if (lines.empty()) throw Error(ErrorKind::Parse, "missing (p, q) header");
  const Line& header = lines.front();
  if (header.values.size() != 2) parse_error(header.number, "header must be 'p q'");
  const int p = header_count(header, header.values[0], "p");
  const int q = header_count(header, header.values[1], "q");
  if (p + q < 1) parse_error(header.number, "p + q must be positive");

  SigMatrixSet out{sig::SignatureForm(p, q), {}};
  for (Mat& m : read_blocks(lines, p + q, p + q)) {
    out.matrices.emplace_back(std::move(m), out.form);
  }
  return out;
}

void write_sig_matrices(std::ostream& out, const sig::SignatureForm& form,
                        const std::vector<sig::SigMatrix>& matrices) {
  const auto flags = out.flags();
  const auto precision = out.precision(std::numeric_limits<double>::max_digits10);
  out << form.p() << ' ' << form.q() << '\n';
  for (const sig::SigMatrix& l : matrices) {
    out << '\n';
    for (Eigen::Index r = 0; r < l.matrix().rows(); ++r) write_row(out, l.matrix(), r, " ");
  }
  out.precision(precision);
  out.flags(flags);
}

std::vector<grass::GrassPoint> read_grass_bases(std::istream& in) {
  const std::vector<Line> lines = read_lines(in);
  if (lines.empty()) throw Error(ErrorKind::Parse, "missing (n, p) header");
  const Line& header = lines.front();
  if (header.values.size() != 2) parse_error(header.number, "header must be 'n,p'");
  const int n = header_count(header, header.values[0], "n");
  const int p = header_count(header, header.values[1], "p");
  if (p < 1 || p >= n) parse_error(header.number, "need 1 <= p < n");

  std::vector<grass::GrassPoint> out;
  for (const Mat& m : read_blocks(lines, n, p)) out.push_back(grass::orthonormalize(m));
  return out;
}

void write_grass_bases(std::ostream& out, const std::vector<grass::GrassPoint>& bases) {
  if (bases.empty()) return;
  const auto flags = out.flags();
  const auto precision = out.precision(std::numeric_limits<double>::max_digits10);
  out << bases.front().n() << ',' << bases.front().p() << '\n';
  for (const grass::GrassPoint& b : bases) {
    out << '\n';
    for (Eigen::Index r = 0; r < b.n(); ++r) write_row(out, b.basis(), r, ",");
  }
  out.precision(precision);
  out.flags(flags);
}

}  // namespace symspace::io
