#pragma once

// Exact evaluation of integer polynomials at roots of unity.
//
// Polynomials live in Z[q]/(q^n - 1): exponents are reduced mod n. To
// evaluate at w_n^r (w_n a fixed primitive n-th root of unity) we rewrite
// the polynomial in the primitive d-th root w_d = w_n^g for g = gcd(n, r),
// d = n/g, and reduce mod the d-th cyclotomic polynomial. The value is a
// rational integer exactly when the remainder is a constant.

#include <compare>
#include <vector>

#include "cyclesieve/numbers.hpp"

namespace cyclesieve {

class IntPolyModQn {
public:
    explicit IntPolyModQn(int n);

    int modulus() const { return n_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }  // index = exponent

    void add_term(long long exponent, const Int& coeff);  // exponent taken mod n
    const Int& coeff(int exponent) const { return coeffs_.at(static_cast<size_t>(exponent)); }

    Int sum_of_coeffs() const;  // value at q = 1

    bool operator==(const IntPolyModQn&) const = default;

private:
    int n_;
    std::vector<Int> coeffs_;
};

// Cyclotomic polynomial Phi_d as dense integer coefficients, index =
// exponent; computed by exact division of q^d - 1 and cached.
const std::vector<Int>& cyclotomic_polynomial(int d);

struct RootValue {
    bool integral = false;
    Int value;                    // meaningful iff integral
    std::vector<Int> remainder;   // remainder mod Phi_d when not integral

    bool operator==(const Int& x) const { return integral && value == x; }
};

// Value of f at w_n^r, n = f.modulus(); r may be any integer.
RootValue eval_at_root(const IntPolyModQn& f, int r);

}  // namespace cyclesieve
