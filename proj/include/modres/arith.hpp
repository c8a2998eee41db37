#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modres {

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
    return r;
}

std::int64_t checked_pow(std::int64_t base, int exp);

// Ordinary binomial, zero outside 0 <= k <= n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

// Least nonnegative residue.
inline std::uint32_t mod_p(std::int64_t a, std::uint32_t p) {
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

bool is_prime(std::int64_t n);
void require_odd_prime(std::int64_t p, const char* where);

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

// Element of F_p for an odd prime p.
class FpScalar {
public:
    FpScalar(std::int64_t value, std::uint32_t p);
    static FpScalar from_residue(std::uint32_t residue, std::uint32_t p) noexcept {
        FpScalar s;
        s.v_ = residue;
        s.p_ = p;
        return s;
    }

    std::uint32_t value() const noexcept { return v_; }
    std::uint32_t prime() const noexcept { return p_; }
    // Representative in (-p/2, p/2].
    std::int64_t symmetric() const noexcept {
        return v_ > p_ / 2 ? static_cast<std::int64_t>(v_) - p_ : v_;
    }

    FpScalar operator+(const FpScalar& o) const;
    FpScalar operator-(const FpScalar& o) const;
    FpScalar operator*(const FpScalar& o) const;
    FpScalar operator/(const FpScalar& o) const;
    FpScalar operator-() const;
    FpScalar inverse() const;
    bool operator==(const FpScalar& o) const noexcept { return v_ == o.v_ && p_ == o.p_; }
    bool is_zero() const noexcept { return v_ == 0; }

private:
    FpScalar() = default;
    void same_field(const FpScalar& o) const;
    std::uint32_t v_ = 0;
    std::uint32_t p_ = 3;
};

}  // namespace modres
