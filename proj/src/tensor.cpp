#include "modres/tensor.hpp"

#include <sstream>
#include <stdexcept>

#include "modres/arith.hpp"

namespace modres {

TensorVector::TensorVector(int n) : n_(n) {
    if (n < 0 || n > kMaxTensorLength) throw std::invalid_argument("TensorVector: length out of range");
}

TensorVector TensorVector::basis(int n, SignWord w, std::int64_t c) {
    TensorVector v(n);
    if (n < 32 && (w >> n) != 0) throw std::invalid_argument("TensorVector: sign word longer than n");
    v.add(w, c);
    return v;
}

std::int64_t TensorVector::coeff(SignWord w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

void TensorVector::add(SignWord w, std::int64_t c) {
    if (!c) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second = checked_add(it->second, c);
        if (!it->second) terms_.erase(it);
    }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
    if (o.n_ != n_) throw std::invalid_argument("TensorVector: length mismatch");
    for (auto [w, c] : o.terms_) add(w, c);
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
    if (o.n_ != n_) throw std::invalid_argument("TensorVector: length mismatch");
    for (auto [w, c] : o.terms_) add(w, checked_mul(c, -1));
    return *this;
}

TensorVector TensorVector::operator+(const TensorVector& o) const {
    TensorVector r(*this);
    r += o;
    return r;
}

TensorVector TensorVector::operator-(const TensorVector& o) const {
    TensorVector r(*this);
    r -= o;
    return r;
}

TensorVector TensorVector::scaled(std::int64_t s) const {
    TensorVector r(n_);
    for (auto [w, c] : terms_) r.add(w, checked_mul(c, s));
    return r;
}

TensorVector TensorVector::reduced_mod(std::uint32_t p) const {
    TensorVector r(n_);
    for (auto [w, c] : terms_) r.add(w, mod_p(c, p));
    return r;
}

std::string TensorVector::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto [w, c] : terms_) {
        os << (first ? "" : " + ") << c << "*";
        for (int j = 0; j < n_; ++j) os << ((w >> j) & 1 ? '+' : '-');
        first = false;
    }
    return first ? "0" : os.str();
}

TensorVector apply_sl2(Sl2 x, const TensorVector& v) {
    const int n = v.length();
    TensorVector r(n);
    for (auto [w, c] : v.terms()) {
        switch (x) {
            case Sl2::E:
                for (int j = 0; j < n; ++j)
                    if (!((w >> j) & 1)) r.add(w | (SignWord(1) << j), c);
                break;
            case Sl2::F:
                for (int j = 0; j < n; ++j)
                    if ((w >> j) & 1) r.add(w & ~(SignWord(1) << j), c);
                break;
            case Sl2::H: {
                const int plus = __builtin_popcount(w);
                r.add(w, checked_mul(c, plus - (n - plus)));
                break;
            }
        }
    }
    return r;
}

TensorVector apply_e_power(int k, const TensorVector& v) {
    if (k < 0) throw std::invalid_argument("apply_e_power: negative exponent");
    TensorVector r = v;
    for (int i = 0; i < k; ++i) r = apply_sl2(Sl2::E, r);
    return r;
}

std::int64_t inner_product(const TensorVector& a, const TensorVector& b) {
    if (a.length() != b.length()) throw std::invalid_argument("inner_product: length mismatch");
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& big = a.size() <= b.size() ? b : a;
    std::int64_t s = 0;
    for (auto [w, c] : small.terms()) {
        const std::int64_t d = big.coeff(w);
        if (d) s = checked_add(s, checked_mul(c, d));
    }
    return s;
}

TensorVector perm_action(const Permutation& sigma, const TensorVector& v, bool signed_action) {
    const int n = v.length();
    if (sigma.size() != n) throw std::invalid_argument("perm_action: size mismatch");
    const int s = signed_action ? sigma.sign() : 1;
    TensorVector r(n);
    for (auto [w, c] : v.terms()) {
        SignWord out = 0;
        for (int i = 0; i < n; ++i)
            if ((w >> i) & 1) out |= SignWord(1) << sigma(i);
        r.add(out, s == 1 ? c : checked_mul(c, -1));
    }
    return r;
}

namespace {
SignWord insert_pair(SignWord w, int k, SignWord pair_bits) {
    // slots k, k+1 (1-based) receive pair_bits; later slots shift by two
    const SignWord low = w & ((SignWord(1) << (k - 1)) - 1);
    const SignWord high = w >> (k - 1);
    return low | (pair_bits << (k - 1)) | (high << (k + 1));
}
}  // namespace

TensorVector coev(int k, const TensorVector& v) {
    const int n = v.length();
    if (k < 1 || k > n + 1) throw std::invalid_argument("coev: slot out of range");
    TensorVector r(n + 2);
    for (auto [w, c] : v.terms()) {
        r.add(insert_pair(w, k, 0b10), c);                  // e- (x) e+
        r.add(insert_pair(w, k, 0b01), checked_mul(c, -1));  // e+ (x) e-
    }
    return r;
}

TensorVector ev(int k, const TensorVector& v) {
    const int n = v.length();
    if (k < 1 || k > n - 1) throw std::invalid_argument("ev: slot out of range");
    TensorVector r(n - 2);
    for (auto [w, c] : v.terms()) {
        const SignWord pair = (w >> (k - 1)) & 0b11;
        if (pair == 0b00 || pair == 0b11) continue;
        const SignWord low = w & ((SignWord(1) << (k - 1)) - 1);
        const SignWord rest = low | ((w >> (k + 1)) << (k - 1));
        // coev^* gives +1 on (-,+) and -1 on (+,-); ev is its negative
        r.add(rest, pair == 0b10 ? checked_mul(c, -1) : c);
    }
    return r;
}

}  // namespace modres
