#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "modres/permutation.hpp"

namespace modres {

// Bit j set means slot j+1 carries e_plus.
using SignWord = std::uint32_t;

inline constexpr int kMaxTensorLength = 30;

// Sparse vector in L^n = (Z^2)^{tensor n} in the sign-word basis.
class TensorVector {
public:
    explicit TensorVector(int n = 0);
    static TensorVector basis(int n, SignWord w, std::int64_t c = 1);

    int length() const noexcept { return n_; }
    const std::map<SignWord, std::int64_t>& terms() const noexcept { return terms_; }
    std::int64_t coeff(SignWord w) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    void add(SignWord w, std::int64_t c);

    TensorVector& operator+=(const TensorVector& o);
    TensorVector& operator-=(const TensorVector& o);
    TensorVector operator+(const TensorVector& o) const;
    TensorVector operator-(const TensorVector& o) const;
    TensorVector scaled(std::int64_t s) const;
    // Coefficients reduced to [0, p).
    TensorVector reduced_mod(std::uint32_t p) const;
    bool operator==(const TensorVector& o) const = default;
    std::string to_string() const;

private:
    int n_;
    std::map<SignWord, std::int64_t> terms_;
};

enum class Sl2 { E, F, H };

TensorVector apply_sl2(Sl2 x, const TensorVector& v);
TensorVector apply_e_power(int k, const TensorVector& v);
std::int64_t inner_product(const TensorVector& a, const TensorVector& b);

// sigma(v_1 (x) ... (x) v_n): the factor in slot i moves to slot sigma(i).
TensorVector perm_action(const Permutation& sigma, const TensorVector& v, bool signed_action = false);

// Insert e_minus(x)e_plus - e_plus(x)e_minus into slots k, k+1 (1 <= k <= n+1).
TensorVector coev(int k, const TensorVector& v);
// Contract slots k, k+1 (1 <= k <= n-1); ev_k = -coev_k^*.
TensorVector ev(int k, const TensorVector& v);

}  // namespace modres
