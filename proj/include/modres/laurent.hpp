#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace modres {

// Laurent polynomial in one variable y over Z.
class LaurentInt {
public:
    LaurentInt() = default;
    static LaurentInt monomial(int exponent, std::int64_t coeff = 1);
    static LaurentInt constant(std::int64_t c) { return monomial(0, c); }

    const std::map<int, std::int64_t>& terms() const noexcept { return terms_; }
    std::int64_t coeff(int e) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    void add_term(int e, std::int64_t c);

    LaurentInt operator+(const LaurentInt& o) const;
    LaurentInt operator-(const LaurentInt& o) const;
    LaurentInt operator*(const LaurentInt& o) const;
    LaurentInt& operator+=(const LaurentInt& o);
    LaurentInt scaled(std::int64_t s) const;
    bool operator==(const LaurentInt& o) const = default;

    // y -> y^{-1}
    LaurentInt bar() const;
    std::string to_string() const;

private:
    std::map<int, std::int64_t> terms_;
};

// [n]_y = y^{n-1} + y^{n-3} + ... + y^{1-n}; [0] = 0.
LaurentInt quantum_integer(int n);

}  // namespace modres
