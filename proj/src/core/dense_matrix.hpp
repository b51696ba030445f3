#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace focp {

// Row-major dense matrix; just enough surface for assembly and elimination.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>(j * cols_));
    }

    const std::vector<double>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace focp
