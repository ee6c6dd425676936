#include "cyclesieve/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "cyclesieve/cache.hpp"
#include "cyclesieve/tableau.hpp"

namespace cyclesieve {

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::Monomial: return "m";
        case Basis::Schur: return "s";
        case Basis::PowerSum: return "p";
        case Basis::Homogeneous: return "h";
        case Basis::Elementary: return "e";
    }
    return "?";
}

SymFunc::SymFunc(int degree, Basis basis) : degree_(degree), basis_(basis) {
    if (degree < 0) throw std::invalid_argument("SymFunc: degree must be nonnegative");
}

SymFunc SymFunc::unit(Basis basis, const Partition& lam, const Rat& c) {
    SymFunc f(lam.size(), basis);
    f.set_coeff(lam, c);
    return f;
}

Rat SymFunc::coeff(const Partition& lam) const {
    auto it = coeffs_.find(lam);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void SymFunc::set_coeff(const Partition& lam, const Rat& c) {
    if (lam.size() != degree_)
        throw std::invalid_argument("SymFunc: partition size must match degree");
    if (c == 0)
        coeffs_.erase(lam);
    else
        coeffs_[lam] = c;
}

void SymFunc::add_coeff(const Partition& lam, const Rat& c) {
    set_coeff(lam, coeff(lam) + c);
}

bool SymFunc::integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const auto& kv) { return is_integer(kv.second); });
}

bool SymFunc::nonnegative_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const auto& kv) { return kv.second >= 0; });
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (degree_ != o.degree_ || basis_ != o.basis_)
        throw std::invalid_argument("SymFunc: degree/basis mismatch in +=");
    for (const auto& [lam, c] : o.coeffs_) add_coeff(lam, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (degree_ != o.degree_ || basis_ != o.basis_)
        throw std::invalid_argument("SymFunc: degree/basis mismatch in -=");
    for (const auto& [lam, c] : o.coeffs_) add_coeff(lam, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [lam, v] : coeffs_) v *= c;
    return *this;
}

// --- basis conversion -----------------------------------------------------

namespace {

// Dense transition matrices with rows/columns indexed like degree_tables.
struct PowerTransition {
    // row mu, column rho: coefficient of p_rho in h_mu (resp. e_mu)
    std::vector<std::vector<Rat>> h_to_p;
    std::vector<std::vector<Rat>> e_to_p;
    // inverses of the transposes: given p coefficients, recover h (resp. e)
    std::vector<std::vector<Rat>> p_to_h;
    std::vector<std::vector<Rat>> p_to_e;
};

std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> a) {
    size_t n = a.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("symfunc: singular transition matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat factor = a[row][col];
            for (size_t j = 0; j < n; ++j) {
                a[row][j] -= factor * a[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

// p-expansion of h_k: sum over rho |- k of p_rho / z_rho.
// Multiplying expansions merges sorted part lists.
std::map<Partition, Rat> h_power_expansion(const std::vector<int>& mu) {
    std::map<Partition, Rat> acc{{Partition{}, Rat(1)}};
    for (int k : mu) {
        const auto& tk = degree_tables(k);
        std::map<Partition, Rat> next;
        for (const auto& [lam, c] : acc)
            for (size_t m = 0; m < tk.partitions.size(); ++m) {
                std::vector<int> merged = lam.parts();
                const auto& add = tk.partitions[m].parts();
                merged.insert(merged.end(), add.begin(), add.end());
                Partition key = Partition::from_unsorted(std::move(merged));
                next[key] += c / Rat(tk.z[m]);
            }
        acc = std::move(next);
    }
    return acc;
}

const PowerTransition& power_transition(int d) {
    static std::map<int, PowerTransition> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    const auto& t = degree_tables(d);
    size_t k = t.partitions.size();
    PowerTransition pt;
    pt.h_to_p.assign(k, std::vector<Rat>(k, Rat(0)));
    pt.e_to_p.assign(k, std::vector<Rat>(k, Rat(0)));
    for (size_t m = 0; m < k; ++m) {
        auto expansion = h_power_expansion(t.partitions[m].parts());
        for (const auto& [rho, c] : expansion) {
            size_t r = static_cast<size_t>(t.index_of(rho));
            pt.h_to_p[m][r] = c;
            int sign = (d - rho.length()) % 2 ? -1 : 1;
            pt.e_to_p[m][r] = sign * c;
        }
    }
    // apply_matrix computes out[rho] = sum_mu d[mu] * M[mu][rho], so the
    // reverse direction needs the plain inverse of the forward matrix
    pt.p_to_h = invert(pt.h_to_p);
    pt.p_to_e = invert(pt.e_to_p);

    auto& slot = cache[d];
    slot = std::move(pt);
    return slot;
}

std::vector<Rat> dense_coeffs(const SymFunc& f) {
    const auto& t = degree_tables(f.degree());
    std::vector<Rat> v(t.partitions.size(), Rat(0));
    for (const auto& [lam, c] : f.coeffs()) v[static_cast<size_t>(t.index_of(lam))] = c;
    return v;
}

SymFunc from_dense(std::vector<Rat> v, int degree, Basis basis) {
    const auto& t = degree_tables(degree);
    SymFunc f(degree, basis);
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) f.set_coeff(t.partitions[i], v[i]);
    return f;
}

SymFunc schur_to_power(const SymFunc& f) {
    const auto& t = degree_tables(f.degree());
    auto c = dense_coeffs(f);
    std::vector<Rat> p(c.size(), Rat(0));
    for (size_t m = 0; m < c.size(); ++m) {
        for (size_t l = 0; l < c.size(); ++l)
            if (c[l] != 0) p[m] += c[l] * Rat(t.character[l][m]);
        p[m] /= Rat(t.z[m]);
    }
    return from_dense(std::move(p), f.degree(), Basis::PowerSum);
}

SymFunc power_to_schur(const SymFunc& f) {
    const auto& t = degree_tables(f.degree());
    auto d = dense_coeffs(f);
    std::vector<Rat> c(d.size(), Rat(0));
    for (size_t l = 0; l < d.size(); ++l)
        for (size_t m = 0; m < d.size(); ++m)
            if (d[m] != 0) c[l] += d[m] * Rat(t.character[l][m]);
    return from_dense(std::move(c), f.degree(), Basis::Schur);
}

SymFunc schur_to_monomial(const SymFunc& f) {
    const auto& t = degree_tables(f.degree());
    auto c = dense_coeffs(f);
    std::vector<Rat> b(c.size(), Rat(0));
    for (size_t m = 0; m < c.size(); ++m)
        for (size_t l = 0; l < c.size(); ++l)
            if (c[l] != 0) b[m] += c[l] * Rat(t.kostka[l][m]);
    return from_dense(std::move(b), f.degree(), Basis::Monomial);
}

SymFunc monomial_to_schur(const SymFunc& f) {
    // Kostka is unitriangular with respect to the decreasing lexicographic
    // order refining dominance: back substitution from the top.
    const auto& t = degree_tables(f.degree());
    auto b = dense_coeffs(f);
    std::vector<Rat> c(b.size(), Rat(0));
    for (size_t l = 0; l < b.size(); ++l) {
        Rat v = b[l];
        for (size_t k = 0; k < l; ++k)
            if (c[k] != 0) v -= c[k] * Rat(t.kostka[k][l]);
        c[l] = v;
    }
    return from_dense(std::move(c), f.degree(), Basis::Schur);
}

SymFunc apply_matrix(const SymFunc& f, const std::vector<std::vector<Rat>>& rows_to_cols,
                     Basis out_basis) {
    // out[rho] = sum_mu coeff[mu] * rows_to_cols[mu][rho]
    auto c = dense_coeffs(f);
    std::vector<Rat> out(c.size(), Rat(0));
    for (size_t m = 0; m < c.size(); ++m) {
        if (c[m] == 0) continue;
        for (size_t r = 0; r < c.size(); ++r)
            if (rows_to_cols[m][r] != 0) out[r] += c[m] * rows_to_cols[m][r];
    }
    return from_dense(std::move(out), f.degree(), out_basis);
}

SymFunc to_power(const SymFunc& f) {
    switch (f.basis()) {
        case Basis::PowerSum: return f;
        case Basis::Schur: return schur_to_power(f);
        case Basis::Monomial: return schur_to_power(monomial_to_schur(f));
        case Basis::Homogeneous:
            return apply_matrix(f, power_transition(f.degree()).h_to_p, Basis::PowerSum);
        case Basis::Elementary:
            return apply_matrix(f, power_transition(f.degree()).e_to_p, Basis::PowerSum);
    }
    throw std::logic_error("to_power: bad basis");
}

SymFunc from_power(const SymFunc& f, Basis target) {
    switch (target) {
        case Basis::PowerSum: return f;
        case Basis::Schur: return power_to_schur(f);
        case Basis::Monomial: return schur_to_monomial(power_to_schur(f));
        case Basis::Homogeneous:
            return apply_matrix(f, power_transition(f.degree()).p_to_h, Basis::Homogeneous);
        case Basis::Elementary:
            return apply_matrix(f, power_transition(f.degree()).p_to_e, Basis::Elementary);
    }
    throw std::logic_error("from_power: bad basis");
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    return from_power(to_power(f), target);
}

bool value_equal(const SymFunc& a, const SymFunc& b) {
    if (a.degree() != b.degree()) return false;
    return to_power(a).coeffs() == to_power(b).coeffs();
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = to_power(f), gp = to_power(g);
    SymFunc prod(f.degree() + g.degree(), Basis::PowerSum);
    for (const auto& [lam, c] : fp.coeffs())
        for (const auto& [mu, d] : gp.coeffs()) {
            std::vector<int> merged = lam.parts();
            merged.insert(merged.end(), mu.parts().begin(), mu.parts().end());
            prod.add_coeff(Partition::from_unsorted(std::move(merged)), c * d);
        }
    return convert(prod, f.basis());
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = to_power(f), gp = to_power(g);
    SymFunc out(f.degree() * g.degree(), Basis::PowerSum);
    for (const auto& [lam, c] : fp.coeffs()) {
        // p_lam[g] = prod_i (g with parts scaled by lam_i)
        SymFunc term(0, Basis::PowerSum);
        term.set_coeff(Partition{}, Rat(1));
        for (int k : lam.parts()) {
            SymFunc stretched(g.degree() * k, Basis::PowerSum);
            for (const auto& [mu, d] : gp.coeffs()) {
                std::vector<int> scaled = mu.parts();
                for (int& part : scaled) part *= k;
                stretched.set_coeff(Partition(std::move(scaled)), d);
            }
            // product in the power basis, staying there
            SymFunc next(term.degree() + stretched.degree(), Basis::PowerSum);
            for (const auto& [a, ca] : term.coeffs())
                for (const auto& [b, cb] : stretched.coeffs()) {
                    std::vector<int> merged = a.parts();
                    merged.insert(merged.end(), b.parts().begin(), b.parts().end());
                    next.add_coeff(Partition::from_unsorted(std::move(merged)), ca * cb);
                }
            term = std::move(next);
        }
        if (f.degree() == 0) {
            out.add_coeff(Partition{}, c);
            continue;
        }
        for (const auto& [mu, d] : term.coeffs()) out.add_coeff(mu, c * d);
    }
    return convert(out, f.basis());
}

SymFunc omega(const SymFunc& f) {
    SymFunc fp = to_power(f);
    SymFunc out(f.degree(), Basis::PowerSum);
    for (const auto& [lam, c] : fp.coeffs()) {
        int sign = (lam.size() - lam.length()) % 2 ? -1 : 1;
        out.set_coeff(lam, sign * c);
    }
    return convert(out, f.basis());
}

// --- content generating functions ----------------------------------------

ContentAccumulator::ContentAccumulator(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("ContentAccumulator: negative degree");
}

void ContentAccumulator::add(const Composition& c) {
    Composition key = strip_trailing_zeros(c);
    int total = 0;
    for (int part : key) {
        if (part < 0) throw std::invalid_argument("ContentAccumulator: negative part");
        total += part;
    }
    if (total != degree_)
        throw std::invalid_argument("ContentAccumulator: content does not sum to degree");
    ++counts_[key];
    ++total_;
}

void ContentAccumulator::add_word(std::span<const int> w) {
    add(content(w));
}

SymFunc ContentAccumulator::to_symfunc(bool validate) const {
    SymFunc f(degree_, Basis::Monomial);
    for (const auto& [comp, count] : counts_) {
        // a key that is a weakly decreasing positive prefix is a partition
        if (!std::is_sorted(comp.begin(), comp.end(), std::greater<>())) continue;
        if (std::any_of(comp.begin(), comp.end(), [](int x) { return x == 0; })) continue;
        f.set_coeff(Partition(std::vector<int>(comp.begin(), comp.end())), Rat(count));
    }
    if (validate) {
        // counts must be constant on rearrangement classes
        size_t alphabet = 0;
        for (const auto& [comp, count] : counts_) {
            alphabet = std::max(alphabet, comp.size());
            Composition sorted = comp;
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            sorted = strip_trailing_zeros(sorted);
            auto it = counts_.find(sorted);
            long long expect = it == counts_.end() ? 0 : it->second;
            if (expect != count)
                throw std::invalid_argument("content multiset not symmetric");
        }
        // ... and no rearrangement class may be partially missing: the
        // arrangement counts over the widest observed alphabet must add up.
        Int covered = 0;
        for (const auto& [lam, c] : f.coeffs()) {
            std::map<int, int> mult;
            for (int part : lam.parts()) ++mult[part];
            mult[0] += static_cast<int>(alphabet) - lam.length();
            Int arrangements = factorial(static_cast<int>(alphabet));
            for (const auto& [value, m] : mult) arrangements /= factorial(m);
            covered += arrangements * to_integer(c);
        }
        if (covered != total_)
            throw std::invalid_argument("content multiset not symmetric");
    }
    return f;
}

SymFunc from_content_multiset(const std::vector<Composition>& contents, int degree,
                              bool validate) {
    ContentAccumulator acc(degree);
    for (const auto& c : contents) acc.add(c);
    return acc.to_symfunc(validate);
}

SymFunc schur_expand_descent_class(const std::vector<int>& D, int n) {
    if (n < 0) throw std::invalid_argument("schur_expand_descent_class: n must be nonnegative");
    for (int d : D)
        if (d < 1 || d >= n)
            throw std::invalid_argument("schur_expand_descent_class: descents must lie in [1, n-1]");
    std::vector<int> want(D);
    std::sort(want.begin(), want.end());
    SymFunc f(n, Basis::Schur);
    for (const auto& lam : partitions_of(n))
        for_each_syt(lam, [&](const Tableau& q) {
            if (tableau_descents(q) == want) f.add_coeff(lam, Rat(1));
        });
    return f;
}

std::string to_string(const SymFunc& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& [lam, c] : f.coeffs()) {
        if (!s.empty()) s += ' ';
        s += to_string(lam);
        s += ':';
        s += c.str();
    }
    return s;
}

}  // namespace cyclesieve
