#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace modres {

using FpVec = std::vector<std::uint32_t>;

// Dense matrix over F_p, row-major. Rows index the codomain basis.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);
    static FpMatrix identity(std::size_t n, std::uint32_t p);
    static FpMatrix from_columns(const std::vector<FpVec>& cols, std::size_t rows, std::uint32_t p);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t prime() const noexcept { return p_; }

    std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t v);

    FpVec column(std::size_t c) const;
    FpMatrix transpose() const;
    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    FpMatrix scaled(std::uint32_t s) const;
    FpVec apply(const FpVec& v) const;
    bool is_zero() const;
    bool operator==(const FpMatrix& o) const = default;

    // Columns chosen by index, in the given order.
    FpMatrix select_columns(const std::vector<std::size_t>& idx) const;
    FpMatrix select_rows(const std::vector<std::size_t>& idx) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::uint32_t p_ = 3;
    std::vector<std::uint32_t> data_;
};

struct RowEchelon {
    FpMatrix rref;
    std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form. Pivot: scan columns left to right, first nonzero row top-down.
RowEchelon row_reduce(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

struct RankKernelImage {
    std::size_t rank = 0;
    std::vector<FpVec> kernel_basis;  // vectors in the domain
    std::vector<FpVec> image_basis;   // pivot columns of the input
};
RankKernelImage rank_kernel_image(const FpMatrix& m);

// Solve A X = B. nullopt when some column of B is outside the column space of A.
// Free variables are set to zero.
std::optional<FpMatrix> solve_many(const FpMatrix& a, const FpMatrix& b);
std::optional<FpVec> solve(const FpMatrix& a, const FpVec& b);

// Quotient of F_p^d by the radical of a symmetric bilinear form given by its Gram matrix.
// The complement of the radical is spanned by the unit vectors at the pivot columns of the
// Gram matrix (or of its column-reversed copy when reverse_pivots is set).
class RadicalQuotient {
public:
    RadicalQuotient() = default;
    explicit RadicalQuotient(FpMatrix gram, bool reverse_pivots = false);

    std::size_t ambient_dim() const noexcept { return gram_.rows(); }
    std::size_t quotient_dim() const noexcept { return complement_.size(); }
    std::size_t radical_dim() const noexcept { return ambient_dim() - quotient_dim(); }
    const FpMatrix& gram() const noexcept { return gram_; }
    const std::vector<std::size_t>& complement() const noexcept { return complement_; }
    // d x (d - r) matrix whose columns span the radical.
    const FpMatrix& radical_basis() const noexcept { return radical_; }

    // d x r matrix of the complement unit vectors.
    FpMatrix lift() const;
    // Coordinates (r x k) in the complement basis of the classes of the columns of x (d x k).
    FpMatrix project(const FpMatrix& x) const;
    // Matrix (r x r) of the map induced by a d x d matrix preserving the radical.
    FpMatrix induced(const FpMatrix& action) const;
    std::uint32_t trace(const FpMatrix& action) const;
    bool preserves_radical(const FpMatrix& action) const;

private:
    FpMatrix gram_;
    std::vector<std::size_t> complement_;
    FpMatrix radical_;
};

// Matrix between two quotients induced by m : ambient(src) -> ambient(dst).
FpMatrix induced_between(const RadicalQuotient& src, const RadicalQuotient& dst, const FpMatrix& m);

std::uint32_t trace(const FpMatrix& m);

}  // namespace modres
