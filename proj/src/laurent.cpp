#include "modres/laurent.hpp"

#include <sstream>
#include <stdexcept>

#include "modres/arith.hpp"

namespace modres {

LaurentInt LaurentInt::monomial(int exponent, std::int64_t coeff) {
    LaurentInt l;
    l.add_term(exponent, coeff);
    return l;
}

std::int64_t LaurentInt::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentInt::add_term(int e, std::int64_t c) {
    if (!c) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second = checked_add(it->second, c);
        if (!it->second) terms_.erase(it);
    }
}

LaurentInt LaurentInt::operator+(const LaurentInt& o) const {
    LaurentInt r(*this);
    r += o;
    return r;
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentInt LaurentInt::operator-(const LaurentInt& o) const { return *this + o.scaled(-1); }

LaurentInt LaurentInt::operator*(const LaurentInt& o) const {
    LaurentInt r;
    for (auto [e1, c1] : terms_)
        for (auto [e2, c2] : o.terms_) r.add_term(e1 + e2, checked_mul(c1, c2));
    return r;
}

LaurentInt LaurentInt::scaled(std::int64_t s) const {
    LaurentInt r;
    for (auto [e, c] : terms_) r.add_term(e, checked_mul(c, s));
    return r;
}

LaurentInt LaurentInt::bar() const {
    LaurentInt r;
    for (auto [e, c] : terms_) r.add_term(-e, c);
    return r;
}

std::string LaurentInt::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        std::int64_t a = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a << '*';
        os << 'y';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

LaurentInt quantum_integer(int n) {
    if (n < 0) throw std::invalid_argument("quantum_integer: n must be >= 0");
    LaurentInt r;
    for (int i = 0; i < n; ++i) r.add_term(n - 1 - 2 * i, 1);
    return r;
}

}  // namespace modres
