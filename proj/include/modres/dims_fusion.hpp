#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "modres/check.hpp"
#include "modres/int_matrix.hpp"

namespace modres {

// d_k^n = sum_s C(n, b + s p), b = (n + 1 - k)/2, for 0 <= k <= p and k = n+1 mod 2.
std::int64_t d_dim(int p, int n, int k);

// Fibonacci numbers for any integer index (f_{-1} = 1, f_0 = 0, f_1 = 1).
std::int64_t fibonacci(int n);

// The four alternating five-periodic Catalan sums for f_{2r} and f_{2r+1}.
struct FibCatalanSums {
    std::int64_t even_a, even_b, odd_a, odd_b;
};
FibCatalanSums fib_catalan_sums(int r);

// Element of the fusion algebra Phi_p: multiplicities of labels {1}..{p-1}.
struct FusionElement {
    int p = 3;
    std::vector<std::int64_t> mult;  // mult[k-1] is the multiplicity of {k}

    std::int64_t operator[](int k) const { return mult.at(k - 1); }
    bool operator==(const FusionElement& o) const = default;
    std::string to_string() const;
};

class FusionAlgebra {
public:
    explicit FusionAlgebra(int p);
    int p() const noexcept { return p_; }
    FusionElement label(int k) const;
    FusionElement unit() const { return label(1); }
    FusionElement zero() const;
    FusionElement add(const FusionElement& x, const FusionElement& y) const;
    FusionElement scale(const FusionElement& x, std::int64_t s) const;
    FusionElement multiply(const FusionElement& x, const FusionElement& y) const;
    FusionElement power(const FusionElement& x, int g) const;
    // Matrix of multiplication by x in the label basis.
    IntMatrix multiplication_matrix(const FusionElement& x) const;
    // N_j (label j) via {j+1} = {2}{j} - {j-1}.
    const IntMatrix& structure(int j) const { return n_.at(j - 1); }

    FusionElement small_f() const;  // 2{1} + {2}
    FusionElement big_f() const;    // sum of {2j+1}^2
    FusionElement big_f_star() const;  // sum of {k}^2

private:
    int p_;
    std::vector<IntMatrix> n_;
};

std::int64_t verlinde_dim(int p, int k, int g);
// sum_n 2^{g-n} binom(g, n) d_k^n over n with k = n + 1 mod 2.
std::int64_t verlinde_dim_from_d(int p, int k, int g);
// Closed forms at p = 5, indexed by label: {D^{(1)}, D^{(2)}, D^{(3)}, D^{(4)}}.
std::array<std::int64_t, 4> lemma15_dims(int g);

// Integer polynomial, coeffs[i] is the coefficient of x^i.
struct IntPolynomial {
    std::vector<std::int64_t> coeffs;
    double evaluate(double x) const;
    bool operator==(const IntPolynomial& o) const = default;
    std::string to_string(char var = 'f') const;
};

// R_p(f) = sum_{j=0}^{(p-3)/2} n_j P_j(f - 2), p odd >= 3.
IntPolynomial tschebycheff_R(int p);

struct PerronNorms {
    double big_closed = 0, small_closed = 0;  // p / (4 sin^2(pi/p)), 4 cos^2(pi/2p)
    double big_power = 0, small_power = 0;    // power iteration
};
PerronNorms perron_norms(int p);
double perron_eigenvalue(const IntMatrix& m, int max_iter = 200000, double tol = 1e-15);

// [2]^n = sum_k d_k^n [k] in Z[zeta_p].
Check quantum_dim_identity(int p, int n);

}  // namespace modres
