#pragma once

#include <string>

#include <Eigen/Dense>

namespace fdclutter {

/// Dense complex matrix file: two little-endian 64-bit unsigned dims (rows,
/// cols) followed by row-major little-endian (re, im) pairs of 64-bit floats.
void write_complex_matrix(const std::string& path, const Eigen::MatrixXcd& matrix);
Eigen::MatrixXcd read_complex_matrix(const std::string& path);

}  // namespace fdclutter
