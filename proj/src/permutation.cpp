#include "modres/permutation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace modres {

Permutation::Permutation(std::vector<int> image) : img_(std::move(image)) {
    std::vector<bool> seen(img_.size(), false);
    for (int x : img_) {
        if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x])
            throw std::invalid_argument("Permutation: not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    std::vector<bool> used(n, false);
    for (const auto& c : cycles) {
        for (std::size_t t = 0; t < c.size(); ++t) {
            const int a = c[t] - 1, b = c[(t + 1) % c.size()] - 1;
            if (a < 0 || a >= n || b < 0 || b >= n || used[a]) throw std::invalid_argument("from_cycles: bad cycle");
            used[a] = true;
            v[a] = b;
        }
    }
    return Permutation(std::move(v));
}

Permutation Permutation::from_cycle_type(const std::vector<int>& type) {
    int n = 0;
    for (int l : type) {
        if (l <= 0) throw std::invalid_argument("cycle lengths must be positive");
        n += l;
    }
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int l : type) {
        std::vector<int> c;
        for (int i = 0; i < l; ++i) c.push_back(next++);
        cycles.push_back(std::move(c));
    }
    return from_cycles(n, cycles);
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (size() != o.size()) throw std::invalid_argument("Permutation product: size mismatch");
    std::vector<int> v(size());
    for (int i = 0; i < size(); ++i) v[i] = img_[o.img_[i]];
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(size());
    for (int i = 0; i < size(); ++i) v[img_[i]] = i;
    return Permutation(std::move(v));
}

int Permutation::sign() const {
    int s = 1;
    for (int l : cycle_type())
        if (l % 2 == 0) s = -s;
    return s;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> t;
    std::vector<bool> seen(size(), false);
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        int l = 0;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            ++l;
        }
        t.push_back(l);
    }
    std::sort(t.rbegin(), t.rend());
    return t;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    std::vector<bool> seen(size(), false);
    bool any = false;
    for (int i = 0; i < size(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        any = true;
        os << '(';
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            os << (j == i ? "" : " ") << j + 1;
        }
        os << ')';
    }
    return any ? os.str() : "()";
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

long long class_size(const std::vector<int>& type) {
    int n = 0;
    for (int l : type) n += l;
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    std::map<int, int> mult;
    for (int l : type) ++mult[l];
    long long z = 1;
    for (auto [l, m] : mult) {
        for (int i = 0; i < m; ++i) z *= l;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return fact / z;
}

}  // namespace modres
