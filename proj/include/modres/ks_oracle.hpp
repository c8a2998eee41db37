#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "modres/specht.hpp"

namespace modres {

// Finite union of half-open integer intervals [s, e), kept sorted with touching pieces merged.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<std::pair<int, int>> intervals);

    const std::vector<std::pair<int, int>>& intervals() const noexcept { return iv_; }
    bool empty() const noexcept { return iv_.empty(); }
    bool contains(int i) const;
    IntervalSet minus_prefix(int k) const;  // I - [0, k)
    IntervalSet union_prefix(int k) const;  // I u [0, k)
    bool operator==(const IntervalSet& o) const = default;
    auto operator<=>(const IntervalSet& o) const = default;
    std::string to_string() const;

private:
    std::vector<std::pair<int, int>> iv_;
};

struct KsContext {
    Diagram2 tau;
    int p = 3;
    std::int64_t c = 1;
    std::vector<int> digits;  // base-p digits of c, least significant first
    int k_tau = -1;           // min j >= 1 with c_j != 0; -1 when there is none
    int h_tau = 1;            // min j >= 1 with c_j != p-1

    int digit(int i) const { return i >= 0 && i < static_cast<int>(digits.size()) ? digits[i] : 0; }
    // Endpoints beyond this index cannot occur in any I with delta_I <= b.
    int endpoint_bound() const;
};

KsContext make_ks_context(const Diagram2& tau, int p);

bool is_admissible(const IntervalSet& I, const KsContext& ctx);
std::int64_t delta(const IntervalSet& I, const KsContext& ctx);
// [a + delta, b - delta]; throws when delta > b.
Diagram2 nu(const IntervalSet& I, const KsContext& ctx);

struct AdmissibleSets {
    int bound = 0;
    std::vector<IntervalSet> all;         // admissible sets with endpoints <= bound
    std::vector<IntervalSet> admissible;  // those with delta <= b
};
AdmissibleSets admissible_sets(const KsContext& ctx, int bound = -1);

std::vector<Diagram2> composition_factors(const KsContext& ctx);

// dim D_p^tau from the partition C(n, b) = sum over A_tau, solved recursively.
std::int64_t ks_recursive_dim(const Diagram2& tau, int p);

struct PhiReport {
    KsContext tau, tau_prime;
    std::vector<std::pair<IntervalSet, IntervalSet>> pairs;  // (I for tau', phi(I) for tau)
    bool digit_law = false;
    bool bijective = false;
    bool delta_relation = false;
    bool nu_relation = false;
    bool admissible_correspondence = false;
    bool pass() const noexcept {
        return digit_law && bijective && delta_relation && nu_relation && admissible_correspondence;
    }
};

// Requires c mod p != 0 and c > p, so that tau' = [a - c0, b + c0] is a diagram.
PhiReport phi_bijection(const KsContext& ctx);

}  // namespace modres
