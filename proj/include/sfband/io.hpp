// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

namespace sfband {

// Shortest exact decimal form: %.17g round-trips IEEE doubles, so repeated
// runs produce byte-identical files. Infinities print as inf / -inf.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

namespace detail {

inline std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  return out;
}

}  // namespace detail

// Complex field on a planar grid: columns x, y, re, im.
inline void write_field_csv(const std::filesystem::path& path,
                            const Eigen::MatrixXd& grid,
                            const Eigen::VectorXcd& values) {
  if (grid.rows() != values.size() || grid.cols() != 2)
    throw std::invalid_argument("write_field_csv: grid/value shape mismatch");
  std::ofstream out = detail::open_output(path);
  out << "x,y,re,im\n";
  for (Eigen::Index i = 0; i < grid.rows(); ++i)
    out << format_double(grid(i, 0)) << ',' << format_double(grid(i, 1)) << ','
        << format_double(values[i].real()) << ','
        << format_double(values[i].imag()) << '\n';
}

// Normalized-error field on a planar grid: columns x, y, ne_db.
inline void write_ne_csv(const std::filesystem::path& path,
                         const Eigen::MatrixXd& grid,
                         const Eigen::VectorXd& ne_db) {
  if (grid.rows() != ne_db.size() || grid.cols() != 2)
    throw std::invalid_argument("write_ne_csv: grid/value shape mismatch");
  std::ofstream out = detail::open_output(path);
  out << "x,y,ne_db\n";
  for (Eigen::Index i = 0; i < grid.rows(); ++i)
    out << format_double(grid(i, 0)) << ',' << format_double(grid(i, 1)) << ','
        << format_double(ne_db[i]) << '\n';
}

// Planar spectrum: columns angle_deg, re, im.
inline void write_spectrum_csv(const std::filesystem::path& path,
                               const Eigen::VectorXd& angles_deg,
                               const Eigen::VectorXcd& values) {
  if (angles_deg.size() != values.size())
    throw std::invalid_argument("write_spectrum_csv: size mismatch");
  std::ofstream out = detail::open_output(path);
  out << "angle_deg,re,im\n";
  for (Eigen::Index i = 0; i < angles_deg.size(); ++i)
    out << format_double(angles_deg[i]) << ','
        << format_double(values[i].real()) << ','
        << format_double(values[i].imag()) << '\n';
}

}  // namespace sfband
