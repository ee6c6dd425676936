#include "cyclesieve/numbers.hpp"

#include <numeric>
#include <stdexcept>

namespace cyclesieve {

int moebius(long long n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be positive");
    int primes = 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;  // square factor
        ++primes;
    }
    if (n > 1) ++primes;
    return primes % 2 ? -1 : 1;
}

long long rad(long long n) {
    if (n < 1) throw std::invalid_argument("rad: n must be positive");
    long long r = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        r *= p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) r *= n;
    return r;
}

std::vector<long long> divisors(long long n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact: r is always a binomial coefficient here
    }
    return r;
}

Int multinomial(int n, std::span<const int> parts) {
    int sum = 0;
    Int denom = 1;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        sum += p;
        denom *= factorial(p);
    }
    if (sum != n) throw std::invalid_argument("multinomial: parts must sum to n");
    return factorial(n) / denom;
}

bool is_integer(const Rat& x) {
    return boost::multiprecision::denominator(x) == 1;
}

Int to_integer(const Rat& x) {
    if (!is_integer(x)) throw std::logic_error("to_integer: rational is not integral");
    return boost::multiprecision::numerator(x);
}

}  // namespace cyclesieve
