#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modres/laurent.hpp"

namespace modres {

// Element of Z[zeta_p] or F_q[zeta_p] in the basis zeta^0 .. zeta^{p-2}.
// modulus == 0 means coefficients in Z.
class CyclotomicElem {
public:
    CyclotomicElem(int p, std::uint32_t modulus = 0);
    static CyclotomicElem zeta_power(int p, long e, std::uint32_t modulus = 0);
    static CyclotomicElem constant(int p, std::int64_t c, std::uint32_t modulus = 0);

    int order() const noexcept { return p_; }
    std::uint32_t modulus() const noexcept { return mod_; }
    const std::vector<std::int64_t>& coords() const noexcept { return c_; }
    std::int64_t coord(int j) const { return c_.at(j); }

    CyclotomicElem operator+(const CyclotomicElem& o) const;
    CyclotomicElem operator-(const CyclotomicElem& o) const;
    CyclotomicElem operator*(const CyclotomicElem& o) const;
    CyclotomicElem scaled(std::int64_t s) const;
    bool operator==(const CyclotomicElem& o) const;
    bool is_zero() const;

    // zeta -> zeta^{-1}
    CyclotomicElem conj() const;
    CyclotomicElem reduced(std::uint32_t modulus) const;
    std::string to_string() const;

private:
    void compatible(const CyclotomicElem& o) const;
    void normalize();
    // Accumulate a length-p vector in powers zeta^0..zeta^{p-1}.
    static CyclotomicElem from_power_vector(int p, std::uint32_t mod, const std::vector<std::int64_t>& v);
    int p_;
    std::uint32_t mod_;
    std::vector<std::int64_t> c_;
};

// Generic balanced quantum integer x^{n-1} + x^{n-3} + ... + x^{1-n}.
template <class Ring>
Ring quantum_integer_in(int n, const Ring& x, const Ring& x_inv, const Ring& zero, const Ring& one) {
    if (n <= 0) return zero;
    Ring top = one;
    for (int i = 0; i < n - 1; ++i) top = top * x;
    const Ring step = x_inv * x_inv;
    Ring acc = zero;
    for (int i = 0; i < n; ++i) {
        acc = acc + top;
        top = top * step;
    }
    return acc;
}

// [n] evaluated at sign * zeta_p.
CyclotomicElem quantum_integer_at(int n, int p, int sign = 1, std::uint32_t modulus = 0);

// Substitute y = sign * zeta_p into a Laurent polynomial.
CyclotomicElem cyclotomic_eval(const LaurentInt& f, int p, int sign, std::uint32_t modulus = 0);

}  // namespace modres
