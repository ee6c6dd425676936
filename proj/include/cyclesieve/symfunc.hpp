#pragma once

// Homogeneous symmetric functions of a fixed degree with exact rational
// coefficients, expressed in one of five classical bases. All basis changes
// route through the power sum basis; the monomial<->Schur leg uses the
// Kostka matrix and the Schur<->power leg the character table, both served
// by the per-degree cache.

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cyclesieve/numbers.hpp"
#include "cyclesieve/partition.hpp"
#include "cyclesieve/word.hpp"

namespace cyclesieve {

enum class Basis { Monomial, Schur, PowerSum, Homogeneous, Elementary };

const char* basis_name(Basis b);

class SymFunc {
public:
    SymFunc() = default;  // zero function of degree 0, monomial basis
    SymFunc(int degree, Basis basis);

    // c * (basis element indexed by lam)
    static SymFunc unit(Basis basis, const Partition& lam, const Rat& c = Rat(1));

    int degree() const { return degree_; }
    Basis basis() const { return basis_; }

    // Nonzero coefficients only, keys in decreasing lexicographic order.
    const std::map<Partition, Rat, std::greater<Partition>>& coeffs() const { return coeffs_; }

    Rat coeff(const Partition& lam) const;
    void set_coeff(const Partition& lam, const Rat& c);
    void add_coeff(const Partition& lam, const Rat& c);

    bool is_zero() const { return coeffs_.empty(); }
    bool integer_coeffs() const;
    bool nonnegative_coeffs() const;

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const Rat& c);

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(const Rat& c, SymFunc f) { return f *= c; }

    // Structural equality: same degree, basis, coefficients.
    bool operator==(const SymFunc&) const = default;

private:
    int degree_ = 0;
    Basis basis_ = Basis::Monomial;
    std::map<Partition, Rat, std::greater<Partition>> coeffs_;
};

// Exact change of basis.
SymFunc convert(const SymFunc& f, Basis target);

// Equality as symmetric functions, regardless of basis.
bool value_equal(const SymFunc& a, const SymFunc& b);

// Product, returned in the basis of f. Degrees add.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

// Plethysm f[g], returned in the basis of f; computed through the power sum
// homomorphism p_k[g] = g with every p_j replaced by p_{jk}. Degrees
// multiply.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

// The involution omega (sends s_lam to s_{lam'}), returned in the basis of f.
SymFunc omega(const SymFunc& f);

// --- content generating functions ---------------------------------------

// Accumulates content compositions of a family of objects and reconstructs
// the monomial expansion of the family's content generating function. The
// family must be symmetric in the letters; validation (on by default)
// checks that counts agree across every rearrangement of each content and
// throws std::invalid_argument("content multiset not symmetric") otherwise.
class ContentAccumulator {
public:
    explicit ContentAccumulator(int degree);

    void add(const Composition& content);       // one object's content
    void add_word(std::span<const int> w);      // convenience: content(w)

    long long total() const { return total_; }

    SymFunc to_symfunc(bool validate = true) const;

private:
    int degree_;
    long long total_ = 0;
    std::map<Composition, long long> counts_;  // keys stripped of trailing zeros
};

SymFunc from_content_multiset(const std::vector<Composition>& contents, int degree,
                              bool validate = true);

// Schur expansion of the content generating function of the words with
// descent set exactly D, as a sum over standard tableaux: the coefficient
// of s_lam is #{ Q in SYT(lam) : Des(Q) = D }.
SymFunc schur_expand_descent_class(const std::vector<int>& D, int n);

// "(3,1):1 (2,1,1):1"; "0" for the zero function.
std::string to_string(const SymFunc& f);

}  // namespace cyclesieve
