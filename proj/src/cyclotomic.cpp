#include "modres/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

#include "modres/arith.hpp"

namespace modres {

CyclotomicElem::CyclotomicElem(int p, std::uint32_t modulus) : p_(p), mod_(modulus), c_(p - 1, 0) {
    require_odd_prime(p, "CyclotomicElem");
    if (modulus != 0 && !is_prime(modulus)) throw std::invalid_argument("CyclotomicElem: modulus must be 0 or prime");
}

CyclotomicElem CyclotomicElem::from_power_vector(int p, std::uint32_t mod, const std::vector<std::int64_t>& v) {
    CyclotomicElem r(p, mod);
    // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
    const std::int64_t top = v[p - 1];
    for (int j = 0; j < p - 1; ++j) r.c_[j] = checked_sub(v[j], top);
    r.normalize();
    return r;
}

CyclotomicElem CyclotomicElem::zeta_power(int p, long e, std::uint32_t modulus) {
    std::vector<std::int64_t> v(p, 0);
    long r = e % p;
    if (r < 0) r += p;
    v[r] = 1;
    return from_power_vector(p, modulus, v);
}

CyclotomicElem CyclotomicElem::constant(int p, std::int64_t c, std::uint32_t modulus) {
    CyclotomicElem r(p, modulus);
    r.c_[0] = c;
    r.normalize();
    return r;
}

void CyclotomicElem::normalize() {
    if (mod_)
        for (auto& x : c_) x = mod_p(x, mod_);
}

void CyclotomicElem::compatible(const CyclotomicElem& o) const {
    if (p_ != o.p_ || mod_ != o.mod_) throw std::invalid_argument("cyclotomic elements over different rings");
}

CyclotomicElem CyclotomicElem::operator+(const CyclotomicElem& o) const {
    compatible(o);
    CyclotomicElem r(*this);
    for (int j = 0; j < p_ - 1; ++j) r.c_[j] = checked_add(c_[j], o.c_[j]);
    r.normalize();
    return r;
}

CyclotomicElem CyclotomicElem::operator-(const CyclotomicElem& o) const { return *this + o.scaled(-1); }

CyclotomicElem CyclotomicElem::operator*(const CyclotomicElem& o) const {
    compatible(o);
    std::vector<std::int64_t> v(p_, 0);
    for (int i = 0; i < p_ - 1; ++i) {
        if (!c_[i]) continue;
        for (int j = 0; j < p_ - 1; ++j) {
            if (!o.c_[j]) continue;
            auto& slot = v[(i + j) % p_];
            slot = checked_add(slot, checked_mul(c_[i], o.c_[j]));
            if (mod_) slot = mod_p(slot, mod_);
        }
    }
    return from_power_vector(p_, mod_, v);
}

CyclotomicElem CyclotomicElem::scaled(std::int64_t s) const {
    CyclotomicElem r(*this);
    for (auto& x : r.c_) x = checked_mul(x, s);
    r.normalize();
    return r;
}

bool CyclotomicElem::operator==(const CyclotomicElem& o) const {
    compatible(o);
    return c_ == o.c_;
}

bool CyclotomicElem::is_zero() const {
    for (auto x : c_)
        if (x) return false;
    return true;
}

CyclotomicElem CyclotomicElem::conj() const {
    std::vector<std::int64_t> v(p_, 0);
    for (int j = 0; j < p_ - 1; ++j) v[(p_ - j) % p_] = c_[j];
    return from_power_vector(p_, mod_, v);
}

CyclotomicElem CyclotomicElem::reduced(std::uint32_t modulus) const {
    CyclotomicElem r(p_, modulus);
    r.c_ = c_;
    r.normalize();
    return r;
}

std::string CyclotomicElem::to_string() const {
    std::ostringstream os;
    os << '(';
    for (int j = 0; j < p_ - 1; ++j) os << (j ? ", " : "") << c_[j];
    os << ')';
    if (mod_) os << " mod " << mod_;
    return os.str();
}

CyclotomicElem quantum_integer_at(int n, int p, int sign, std::uint32_t modulus) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    const CyclotomicElem x = CyclotomicElem::zeta_power(p, 1, modulus).scaled(sign);
    const CyclotomicElem xi = CyclotomicElem::zeta_power(p, -1, modulus).scaled(sign);
    return quantum_integer_in(n, x, xi, CyclotomicElem(p, modulus), CyclotomicElem::constant(p, 1, modulus));
}

CyclotomicElem cyclotomic_eval(const LaurentInt& f, int p, int sign, std::uint32_t modulus) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    std::vector<std::int64_t> v(p, 0);
    for (auto [e, c] : f.terms()) {
        long r = e % p;
        if (r < 0) r += p;
        std::int64_t term = (sign == -1 && (e % 2 != 0)) ? -c : c;
        v[r] = checked_add(v[r], term);
        if (modulus) v[r] = mod_p(v[r], modulus);
    }
    CyclotomicElem r = CyclotomicElem::constant(p, 0, modulus);
    for (int j = 0; j < p; ++j)
        if (v[j]) r = r + CyclotomicElem::zeta_power(p, j, modulus).scaled(v[j]);
    return r;
}

}  // namespace modres
