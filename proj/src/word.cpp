#include "cyclesieve/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclesieve {

namespace {

void require_letters(std::span<const int> w, const char* who) {
    for (int x : w)
        if (x < 1) throw std::invalid_argument(std::string(who) + ": letters must be >= 1");
}

}  // namespace

Word::Word(std::vector<int> ls) : letters(std::move(ls)) {
    require_letters(letters, "Word");
}

Word::Word(std::initializer_list<int> ls) : Word(std::vector<int>(ls)) {}

Word Word::from_digits(const std::string& digits) {
    std::vector<int> ls;
    ls.reserve(digits.size());
    for (char c : digits) {
        if (c < '1' || c > '9') throw std::invalid_argument("Word::from_digits: digit 1-9 expected");
        ls.push_back(c - '0');
    }
    return Word(std::move(ls));
}

std::string to_string(const Word& w) {
    bool wide = std::any_of(w.letters.begin(), w.letters.end(), [](int x) { return x > 9; });
    std::string s;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (wide && i) s += '.';
        s += std::to_string(w.letters[i]);
    }
    return s;
}

Composition strip_trailing_zeros(Composition c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

bool content_equal(const Composition& a, const Composition& b) {
    return strip_trailing_zeros(a) == strip_trailing_zeros(b);
}

std::vector<int> descent_set(std::span<const int> w) {
    std::vector<int> des;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) des.push_back(static_cast<int>(i) + 1);
    return des;
}

int maj(std::span<const int> w) {
    int m = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) m += static_cast<int>(i) + 1;
    return m;
}

int maj_n(std::span<const int> w) {
    if (w.empty()) throw std::invalid_argument("maj_n: empty word");
    int n = static_cast<int>(w.size());
    return (maj(w) - 1 + n * n) % n + 1;  // maj <= n(n-1)/2 < n*n
}

Composition content(std::span<const int> w) {
    require_letters(w, "content");
    int biggest = 0;
    for (int x : w) biggest = std::max(biggest, x);
    Composition c(static_cast<size_t>(biggest), 0);
    for (int x : w) ++c[static_cast<size_t>(x - 1)];
    return c;
}

std::pair<int, int> period_freq(std::span<const int> w) {
    if (w.empty()) throw std::invalid_argument("period_freq: empty word");
    int n = static_cast<int>(w.size());
    for (int p = 1; p <= n; ++p) {
        if (n % p) continue;
        bool ok = true;
        for (int i = p; i < n && ok; ++i) ok = w[static_cast<size_t>(i)] == w[static_cast<size_t>(i - p)];
        if (ok) return {p, n / p};
    }
    return {n, 1};  // unreachable
}

std::vector<Word> rotations(std::span<const int> w) {
    if (w.empty()) throw std::invalid_argument("rotations: empty word");
    int n = static_cast<int>(w.size());
    int p = period_freq(w).first;
    std::vector<Word> out;
    out.reserve(static_cast<size_t>(p));
    std::vector<int> cur(w.begin(), w.end());
    for (int k = 0; k < p; ++k) {
        out.emplace_back(Word(cur));
        std::rotate(cur.begin(), cur.end() - 1, cur.end());  // w_n to the front
        (void)n;
    }
    return out;
}

int lex_rank(std::span<const int> w) {
    auto rots = rotations(w);
    std::vector<int> self(w.begin(), w.end());
    std::sort(rots.begin(), rots.end());
    for (size_t i = 0; i < rots.size(); ++i)
        if (rots[i].letters == self) return static_cast<int>(i) + 1;
    throw std::logic_error("lex_rank: word not among its rotations");
}

int flex(std::span<const int> w) {
    if (w.empty()) throw std::invalid_argument("flex: empty word");
    return period_freq(w).second * lex_rank(w);
}

void for_each_word(int n, int m, const std::function<void(std::span<const int>)>& fn) {
    if (n < 0 || m < 1) throw std::invalid_argument("for_each_word: need n >= 0, m >= 1");
    std::vector<int> w(static_cast<size_t>(n), 1);
    while (true) {
        fn(w);
        int i = n - 1;
        while (i >= 0 && w[static_cast<size_t>(i)] == m) {
            w[static_cast<size_t>(i)] = 1;
            --i;
        }
        if (i < 0) return;
        ++w[static_cast<size_t>(i)];
    }
}

std::vector<Word> enumerate_words(int n, int m) {
    std::vector<Word> out;
    for_each_word(n, m, [&](std::span<const int> w) {
        out.emplace_back(Word(std::vector<int>(w.begin(), w.end())));
    });
    return out;
}

void for_each_word_of_content(const Composition& alpha,
                              const std::function<void(std::span<const int>)>& fn) {
    std::vector<int> w;
    for (size_t j = 0; j < alpha.size(); ++j) {
        if (alpha[j] < 0) throw std::invalid_argument("for_each_word_of_content: negative part");
        w.insert(w.end(), static_cast<size_t>(alpha[j]), static_cast<int>(j) + 1);
    }
    if (w.empty()) {
        fn(w);
        return;
    }
    do {
        fn(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Word> enumerate_words_by_content(const Composition& alpha) {
    std::vector<Word> out;
    for_each_word_of_content(alpha, [&](std::span<const int> w) {
        out.emplace_back(Word(std::vector<int>(w.begin(), w.end())));
    });
    return out;
}

long long lcm_of(std::span<const int> nu) {
    long long l = 1;
    for (int p : nu) {
        if (p < 1) throw std::invalid_argument("lcm_of: parts must be positive");
        l = std::lcm(l, static_cast<long long>(p));
    }
    return l;
}

std::vector<int> bfmaj_nu(std::span<const int> w, std::span<const int> nu) {
    size_t total = 0;
    for (int p : nu) {
        if (p < 1) throw std::invalid_argument("bfmaj_nu: block lengths must be positive");
        total += static_cast<size_t>(p);
    }
    if (total != w.size()) throw std::invalid_argument("bfmaj_nu: block lengths must sum to len(w)");
    std::vector<int> out;
    out.reserve(nu.size());
    size_t off = 0;
    for (int p : nu) {
        out.push_back(maj_n(w.subspan(off, static_cast<size_t>(p))));
        off += static_cast<size_t>(p);
    }
    return out;
}

int maj_nu(std::span<const int> w, std::span<const int> nu) {
    auto bf = bfmaj_nu(w, nu);
    long long L = lcm_of(nu);
    long long s = 0;
    for (size_t j = 0; j < bf.size(); ++j) s += (L / nu[j]) * bf[j];
    return static_cast<int>((s - 1) % L + 1);  // s >= 1 always
}

}  // namespace cyclesieve
