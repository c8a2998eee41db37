#include "modres/ks_oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "modres/arith.hpp"

namespace modres {

IntervalSet::IntervalSet(std::vector<std::pair<int, int>> intervals) {
    std::sort(intervals.begin(), intervals.end());
    for (auto [s, e] : intervals) {
        if (s < 0 || e < s) throw std::invalid_argument("IntervalSet: bad interval");
        if (s == e) continue;
        if (!iv_.empty() && s <= iv_.back().second)
            iv_.back().second = std::max(iv_.back().second, e);
        else
            iv_.emplace_back(s, e);
    }
}

bool IntervalSet::contains(int i) const {
    for (auto [s, e] : iv_)
        if (s <= i && i < e) return true;
    return false;
}

IntervalSet IntervalSet::minus_prefix(int k) const {
    std::vector<std::pair<int, int>> out;
    for (auto [s, e] : iv_)
        if (e > k) out.emplace_back(std::max(s, k), e);
    return IntervalSet(out);
}

IntervalSet IntervalSet::union_prefix(int k) const {
    auto v = iv_;
    v.emplace_back(0, k);
    return IntervalSet(v);
}

std::string IntervalSet::to_string() const {
    if (iv_.empty()) return "{}";
    std::ostringstream os;
    for (std::size_t i = 0; i < iv_.size(); ++i)
        os << (i ? " u " : "") << '[' << iv_[i].first << ',' << iv_[i].second << ')';
    return os.str();
}

int KsContext::endpoint_bound() const {
    // an interval reaching past the top digit r has delta >= p^{e-1}
    int L = 0;
    std::int64_t pw = 1;
    while (pw <= tau.b) {
        pw = checked_mul(pw, p);
        ++L;
    }
    return std::max(static_cast<int>(digits.size()), L);
}

KsContext make_ks_context(const Diagram2& tau, int p) {
    require_odd_prime(p, "make_ks_context");
    KsContext ctx;
    ctx.tau = tau;
    ctx.p = p;
    ctx.c = tau.c();
    for (std::int64_t x = ctx.c; x > 0; x /= p) ctx.digits.push_back(static_cast<int>(x % p));
    for (int j = 1; j < static_cast<int>(ctx.digits.size()); ++j)
        if (ctx.digits[j] != 0) {
            ctx.k_tau = j;
            break;
        }
    ctx.h_tau = 1;
    while (ctx.digit(ctx.h_tau) == p - 1) ++ctx.h_tau;
    return ctx;
}

bool is_admissible(const IntervalSet& I, const KsContext& ctx) {
    for (auto [s, e] : I.intervals())
        if (ctx.digit(s) == 0 || ctx.digit(e) == ctx.p - 1) return false;
    return true;
}

std::int64_t delta(const IntervalSet& I, const KsContext& ctx) {
    if (!is_admissible(I, ctx)) throw std::invalid_argument("delta: interval set not admissible");
    std::int64_t d = 0;
    for (auto [s, e] : I.intervals()) {
        d = checked_add(d, checked_pow(ctx.p, s));
        for (int i = s; i < e; ++i) d = checked_add(d, checked_mul(ctx.p - 1 - ctx.digit(i), checked_pow(ctx.p, i)));
    }
    return d;
}

Diagram2 nu(const IntervalSet& I, const KsContext& ctx) {
    const std::int64_t d = delta(I, ctx);
    if (d > ctx.tau.b) throw std::invalid_argument("nu: delta exceeds b");
    return Diagram2(ctx.tau.a + static_cast<int>(d), ctx.tau.b - static_cast<int>(d));
}

AdmissibleSets admissible_sets(const KsContext& ctx, int bound) {
    AdmissibleSets out;
    out.bound = bound < 0 ? ctx.endpoint_bound() : bound;
    std::vector<std::pair<int, int>> cur;
    std::function<void(int)> rec = [&](int from) {
        IntervalSet I(cur);
        out.all.push_back(I);
        if (delta(I, ctx) <= ctx.tau.b) out.admissible.push_back(I);
        for (int s = from; s < out.bound; ++s) {
            if (ctx.digit(s) == 0) continue;
            for (int e = s + 1; e <= out.bound; ++e) {
                if (ctx.digit(e) == ctx.p - 1) continue;
                cur.emplace_back(s, e);
                rec(e + 1);  // next start strictly after this end
                cur.pop_back();
            }
        }
    };
    rec(0);
    std::sort(out.all.begin(), out.all.end());
    std::sort(out.admissible.begin(), out.admissible.end());
    return out;
}

std::vector<Diagram2> composition_factors(const KsContext& ctx) {
    std::vector<Diagram2> f;
    for (const auto& I : admissible_sets(ctx).admissible) f.push_back(nu(I, ctx));
    return f;
}

std::int64_t ks_recursive_dim(const Diagram2& tau, int p) {
    static thread_local std::map<std::pair<int, std::pair<int, int>>, std::int64_t> memo;
    const auto key = std::make_pair(p, std::make_pair(tau.a, tau.b));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const KsContext ctx = make_ks_context(tau, p);
    std::int64_t d = catalan(tau.n(), tau.b);
    for (const auto& I : admissible_sets(ctx).admissible)
        if (!I.empty()) d = checked_sub(d, ks_recursive_dim(nu(I, ctx), p));
    memo.emplace(key, d);
    return d;
}

PhiReport phi_bijection(const KsContext& ctx) {
    const int p = ctx.p;
    const int c0 = static_cast<int>(ctx.c % p);
    if (c0 == 0) throw std::invalid_argument("phi_bijection: c must not be divisible by p");
    if (ctx.tau.a - ctx.tau.b < 2 * c0) throw std::invalid_argument("phi_bijection: need a - b >= 2 c0");
    PhiReport r;
    r.tau = ctx;
    r.tau_prime = make_ks_context(Diagram2(ctx.tau.a - c0, ctx.tau.b + c0), p);
    const KsContext& tp = r.tau_prime;
    const int k = ctx.k_tau;

    r.digit_law = k > 0 && tp.digit(0) == p - c0;
    for (int i = 1; r.digit_law && i < k; ++i) r.digit_law = tp.digit(i) == p - 1;
    if (r.digit_law) r.digit_law = tp.digit(k) == ctx.digit(k) - 1;
    const int top = std::max(ctx.digits.size(), tp.digits.size()) + 1;
    for (int i = k + 1; r.digit_law && i <= top; ++i) r.digit_law = tp.digit(i) == ctx.digit(i);
    if (k <= 0) return r;

    const int bound = std::max(ctx.endpoint_bound(), tp.endpoint_bound());
    const auto hat_tp = admissible_sets(tp, bound);
    const auto hat_t = admissible_sets(ctx, bound);
    std::set<IntervalSet> plus_t, adm_t(hat_t.admissible.begin(), hat_t.admissible.end());
    for (const auto& J : hat_t.all)
        if (!J.contains(0)) plus_t.insert(J);

    std::set<IntervalSet> image;
    bool into = true, injective = true;
    r.delta_relation = r.nu_relation = r.admissible_correspondence = true;
    for (const auto& I : hat_tp.all) {
        if (!I.contains(0)) continue;
        const IntervalSet J = I.minus_prefix(k);
        r.pairs.emplace_back(I, J);
        if (!plus_t.count(J)) {
            into = false;
            continue;
        }
        if (!image.insert(J).second) injective = false;
        if (J.union_prefix(k) != I) injective = false;
        const std::int64_t dp = delta(I, tp), d = delta(J, ctx);
        if (dp != d + c0) r.delta_relation = false;
        const bool in_a_prime = dp <= tp.tau.b;
        if (in_a_prime != (adm_t.count(J) > 0)) r.admissible_correspondence = false;
        if (in_a_prime && !(nu(I, tp) == nu(J, ctx))) r.nu_relation = false;
    }
    r.bijective = into && injective && image == plus_t;
    return r;
}

}  // namespace modres
