#include "cyclesieve/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cyclesieve {

IntPolyModQn::IntPolyModQn(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("IntPolyModQn: modulus must be positive");
    coeffs_.assign(static_cast<size_t>(n), Int(0));
}

void IntPolyModQn::add_term(long long exponent, const Int& coeff) {
    long long e = ((exponent % n_) + n_) % n_;
    coeffs_[static_cast<size_t>(e)] += coeff;
}

Int IntPolyModQn::sum_of_coeffs() const {
    Int s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

namespace {

// quotient of (q^d - 1) by all Phi_e, e | d, e < d; exact monic division
std::vector<Int> divide_out(std::vector<Int> num, const std::vector<Int>& den) {
    // num, den dense, den monic; returns num / den (exact)
    std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
    for (size_t k = quot.size(); k-- > 0;) {
        Int c = num[k + den.size() - 1];
        quot[k] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("cyclotomic: division was not exact");
    return quot;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic_polynomial: d must be positive");
    static std::map<int, std::vector<Int>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    std::vector<Int> num(static_cast<size_t>(d) + 1, Int(0));
    num[0] = -1;
    num[static_cast<size_t>(d)] = 1;  // q^d - 1
    for (int e = 1; e < d; ++e) {
        if (d % e) continue;
        // ensure Phi_e cached (recursion depth is the divisor chain length)
        if (!cache.count(e)) {
            std::vector<Int> sub(static_cast<size_t>(e) + 1, Int(0));
            sub[0] = -1;
            sub[static_cast<size_t>(e)] = 1;
            for (int f = 1; f < e; ++f)
                if (e % f == 0) sub = divide_out(std::move(sub), cache.at(f));
            cache[e] = std::move(sub);
        }
        num = divide_out(std::move(num), cache.at(e));
    }
    auto& slot = cache[d];
    slot = std::move(num);
    return slot;
}

RootValue eval_at_root(const IntPolyModQn& f, int r) {
    int n = f.modulus();
    int rr = ((r % n) + n) % n;
    int g = std::gcd(n, rr == 0 ? n : rr);
    int d = n / g;

    // substitute q -> q^r, then write in powers of w_d = w_n^g
    std::vector<Int> h(static_cast<size_t>(d), Int(0));
    for (int e = 0; e < n; ++e) {
        if (f.coeffs()[static_cast<size_t>(e)] == 0) continue;
        long long ex = (static_cast<long long>(e) * rr) % n;
        if (ex % g) throw std::logic_error("eval_at_root: exponent not divisible by gcd");
        h[static_cast<size_t>(ex / g)] += f.coeffs()[static_cast<size_t>(e)];
    }

    // reduce mod Phi_d
    const auto& phi = cyclotomic_polynomial(d);
    size_t deg_phi = phi.size() - 1;
    for (size_t k = h.size(); k-- > deg_phi;) {
        Int c = h[k];
        if (c == 0) continue;
        for (size_t j = 0; j < phi.size(); ++j) h[k - deg_phi + j] -= c * phi[j];
    }
    h.resize(deg_phi == 0 ? 1 : deg_phi);

    RootValue out;
    bool constant = true;
    for (size_t i = 1; i < h.size(); ++i)
        if (h[i] != 0) constant = false;
    if (constant) {
        out.integral = true;
        out.value = h[0];
    } else {
        out.integral = false;
        out.remainder = std::move(h);
    }
    return out;
}

}  // namespace cyclesieve
