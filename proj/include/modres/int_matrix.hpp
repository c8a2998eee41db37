#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modres/fp_matrix.hpp"

namespace modres {

// Dense integer matrix with overflow-checked arithmetic.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& o) const = default;
    bool is_zero() const;
    std::int64_t trace() const;
    FpMatrix mod(std::uint32_t p) const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> data_;
};

}  // namespace modres
