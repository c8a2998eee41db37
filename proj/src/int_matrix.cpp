#include "modres/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "modres/arith.hpp"

namespace modres {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix product: shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::int64_t a = at(i, k);
            if (!a) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (o.at(k, j)) r.at(i, j) = checked_add(r.at(i, j), checked_mul(a, o.at(k, j)));
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix sum: shape mismatch");
    IntMatrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = checked_add(data_[i], o.data_[i]);
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix difference: shape mismatch");
    IntMatrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = checked_sub(data_[i], o.data_[i]);
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    for (auto x : data_)
        if (x) return false;
    return true;
}

std::int64_t IntMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rows_; ++i) s = checked_add(s, at(i, i));
    return s;
}

FpMatrix IntMatrix::mod(std::uint32_t p) const {
    FpMatrix m(rows_, cols_, p);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    return m;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
        os << "]\n";
    }
    return os.str();
}

}  // namespace modres
