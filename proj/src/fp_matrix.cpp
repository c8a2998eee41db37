#include "modres/fp_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "modres/arith.hpp"

namespace modres {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("FpMatrix: modulus must be prime");
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::from_columns(const std::vector<FpVec>& cols, std::size_t rows, std::uint32_t p) {
    FpMatrix m(rows, cols.size(), p);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r] % p;
    }
    return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t v) { at(r, c) = mod_p(v, p_); }

FpVec FpMatrix::column(std::size_t c) const {
    FpVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(cols_, rows_, p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("FpMatrix product: shape mismatch");
    FpMatrix r(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t a = at(i, k);
            if (!a) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.data_[i * o.cols_ + j] =
                    static_cast<std::uint32_t>((r.data_[i * o.cols_ + j] + a * o.at(k, j)) % p_);
        }
    return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw std::invalid_argument("FpMatrix sum: shape mismatch");
    FpMatrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] + o.data_[i]) % p_;
    return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw std::invalid_argument("FpMatrix difference: shape mismatch");
    FpMatrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] + p_ - o.data_[i]) % p_;
    return r;
}

FpMatrix FpMatrix::scaled(std::uint32_t s) const {
    FpMatrix r(*this);
    for (auto& x : r.data_) x = static_cast<std::uint32_t>(std::uint64_t(x) * (s % p_) % p_);
    return r;
}

FpVec FpMatrix::apply(const FpVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("FpMatrix apply: length mismatch");
    FpVec out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s = (s + std::uint64_t(at(i, j)) * v[j]) % p_;
        out[i] = static_cast<std::uint32_t>(s);
    }
    return out;
}

bool FpMatrix::is_zero() const {
    for (auto x : data_)
        if (x) return false;
    return true;
}

FpMatrix FpMatrix::select_columns(const std::vector<std::size_t>& idx) const {
    FpMatrix r(rows_, idx.size(), p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r.at(i, j) = at(i, idx[j]);
    return r;
}

FpMatrix FpMatrix::select_rows(const std::vector<std::size_t>& idx) const {
    FpMatrix r(idx.size(), cols_, p_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(idx[i], j);
    return r;
}

std::string FpMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
        os << "]\n";
    }
    return os.str();
}

RowEchelon row_reduce(const FpMatrix& m) {
    RowEchelon e{m, {}};
    FpMatrix& a = e.rref;
    const std::uint32_t p = a.prime();
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
        const std::uint64_t inv = inv_mod(a.at(row, col), p);
        for (std::size_t j = col; j < a.cols(); ++j)
            a.at(row, j) = static_cast<std::uint32_t>(a.at(row, j) * inv % p);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            const std::uint64_t f = p - a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (a.at(row, j)) a.at(i, j) = static_cast<std::uint32_t>((a.at(i, j) + f * a.at(row, j)) % p);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

std::size_t rank(const FpMatrix& m) { return row_reduce(m).pivot_cols.size(); }

RankKernelImage rank_kernel_image(const FpMatrix& m) {
    RankKernelImage out;
    const RowEchelon e = row_reduce(m);
    out.rank = e.pivot_cols.size();
    const std::uint32_t p = m.prime();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        FpVec v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = (p - e.rref.at(r, f)) % p;
        out.kernel_basis.push_back(std::move(v));
    }
    for (auto c : e.pivot_cols) out.image_basis.push_back(m.column(c));
    return out;
}

std::optional<FpMatrix> solve_many(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows() || a.prime() != b.prime()) throw std::invalid_argument("solve_many: shape mismatch");
    FpMatrix aug(a.rows(), a.cols() + b.cols(), a.prime());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    const RowEchelon e = row_reduce(aug);
    FpMatrix x(a.cols(), b.cols(), a.prime());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
        const std::size_t c = e.pivot_cols[r];
        if (c >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(c, j) = e.rref.at(r, a.cols() + j);
    }
    return x;
}

std::optional<FpVec> solve(const FpMatrix& a, const FpVec& b) {
    auto x = solve_many(a, FpMatrix::from_columns({b}, a.rows(), a.prime()));
    if (!x) return std::nullopt;
    return x->column(0);
}

RadicalQuotient::RadicalQuotient(FpMatrix gram, bool reverse_pivots) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw std::invalid_argument("RadicalQuotient: Gram matrix not square");
    const std::size_t d = gram_.rows();
    if (!reverse_pivots) {
        complement_ = row_reduce(gram_).pivot_cols;
    } else {
        std::vector<std::size_t> rev(d);
        for (std::size_t i = 0; i < d; ++i) rev[i] = d - 1 - i;
        for (auto c : row_reduce(gram_.select_columns(rev)).pivot_cols) complement_.push_back(d - 1 - c);
        std::sort(complement_.begin(), complement_.end());
    }
    const auto rki = rank_kernel_image(gram_);
    radical_ = FpMatrix::from_columns(rki.kernel_basis, d, gram_.prime());
}

FpMatrix RadicalQuotient::lift() const {
    FpMatrix l(ambient_dim(), quotient_dim(), gram_.prime());
    for (std::size_t j = 0; j < complement_.size(); ++j) l.at(complement_[j], j) = 1;
    return l;
}

FpMatrix RadicalQuotient::project(const FpMatrix& x) const {
    // y supported on the complement with G y = G x.
    auto y = solve_many(gram_.select_columns(complement_), gram_ * x);
    if (!y) throw std::logic_error("RadicalQuotient: projection failed");
    return *y;
}

FpMatrix RadicalQuotient::induced(const FpMatrix& action) const { return project(action * lift()); }

std::uint32_t RadicalQuotient::trace(const FpMatrix& action) const { return modres::trace(induced(action)); }

bool RadicalQuotient::preserves_radical(const FpMatrix& action) const {
    if (radical_.cols() == 0) return true;
    return (gram_ * (action * radical_)).is_zero();
}

FpMatrix induced_between(const RadicalQuotient& src, const RadicalQuotient& dst, const FpMatrix& m) {
    return dst.project(m * src.lift());
}

std::uint32_t trace(const FpMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("trace of non-square matrix");
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += m.at(i, i);
    return static_cast<std::uint32_t>(s % m.prime());
}

}  // namespace modres
