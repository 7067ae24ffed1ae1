#include "fdclutter/matrix_io.hpp"

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace fdclutter {

namespace {

// The format is little-endian; this code targets little-endian hosts and
// writes native doubles directly.
void write_u64(std::ofstream& out, std::uint64_t value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof(value));
}

std::uint64_t read_u64(std::ifstream& in) {
    std::uint64_t value = 0;
    in.read(reinterpret_cast<char*>(&value), sizeof(value));
    return value;
}

}  // namespace

void write_complex_matrix(const std::string& path, const Eigen::MatrixXcd& matrix) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_u64(out, static_cast<std::uint64_t>(matrix.rows()));
    write_u64(out, static_cast<std::uint64_t>(matrix.cols()));
    std::vector<double> row(static_cast<std::size_t>(matrix.cols()) * 2);
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
        for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
            row[static_cast<std::size_t>(j) * 2] = matrix(i, j).real();
            row[static_cast<std::size_t>(j) * 2 + 1] = matrix(i, j).imag();
        }
        out.write(reinterpret_cast<const char*>(row.data()),
                  static_cast<std::streamsize>(row.size() * sizeof(double)));
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

Eigen::MatrixXcd read_complex_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    const std::uint64_t rows = read_u64(in);
    const std::uint64_t cols = read_u64(in);
    if (!in) throw std::runtime_error("truncated matrix header: " + path);
    Eigen::MatrixXcd out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    std::vector<double> row(static_cast<std::size_t>(cols) * 2);
    for (std::uint64_t i = 0; i < rows; ++i) {
        in.read(reinterpret_cast<char*>(row.data()),
                static_cast<std::streamsize>(row.size() * sizeof(double)));
        if (!in) throw std::runtime_error("truncated matrix body: " + path);
        for (std::uint64_t j = 0; j < cols; ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {
                row[static_cast<std::size_t>(j) * 2], row[static_cast<std::size_t>(j) * 2 + 1]};
    }
    return out;
}

}  // namespace fdclutter
