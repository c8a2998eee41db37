#include "modres/arith.hpp"

namespace modres {

std::int64_t checked_pow(std::int64_t base, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i after the multiplication
        __int128 t = static_cast<__int128>(r) * (n - k + i);
        t /= i;
        if (t > INT64_MAX) throw OverflowError("binomial overflow");
        r = static_cast<std::int64_t>(t);
    }
    return r;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_odd_prime(std::int64_t p, const char* where) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument(std::string(where) + ": p must be an odd prime, got " +
                                    std::to_string(p));
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1 % p, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero mod p");
    return pow_mod(a, p - 2, p);
}

FpScalar::FpScalar(std::int64_t value, std::uint32_t p) : v_(0), p_(p) {
    require_odd_prime(p, "FpScalar");
    v_ = mod_p(value, p);
}

void FpScalar::same_field(const FpScalar& o) const {
    if (p_ != o.p_) throw std::invalid_argument("F_p scalars over different primes");
}

FpScalar FpScalar::operator+(const FpScalar& o) const {
    same_field(o);
    return from_residue((v_ + o.v_) % p_, p_);
}
FpScalar FpScalar::operator-(const FpScalar& o) const {
    same_field(o);
    return from_residue((v_ + p_ - o.v_) % p_, p_);
}
FpScalar FpScalar::operator*(const FpScalar& o) const {
    same_field(o);
    return from_residue(static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_), p_);
}
FpScalar FpScalar::operator/(const FpScalar& o) const { return *this * o.inverse(); }
FpScalar FpScalar::operator-() const { return from_residue((p_ - v_) % p_, p_); }
FpScalar FpScalar::inverse() const { return from_residue(inv_mod(v_, p_), p_); }

}  // namespace modres
