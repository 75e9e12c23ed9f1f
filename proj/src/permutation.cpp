#include "dehornoy/permutation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dehornoy {

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("identity: negative degree");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w), trusted_tag{});
}

Permutation Permutation::from_word(std::vector<int> word) {
    const int n = static_cast<int>(word.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : word) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("from_word: not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return Permutation(std::move(word), trusted_tag{});
}

bool Permutation::operator<(const Permutation& o) const {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return word_ < o.word_;
}

std::string Permutation::to_string() const {
    std::string s;
    if (degree() <= 9) {
        for (int v : word_) s += static_cast<char>('0' + v);
    } else {
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(word_[i]);
        }
    }
    return s;
}

Permutation Permutation::parse(const std::string& s) {
    std::vector<int> w;
    if (s.find(',') == std::string::npos) {
        for (char c : s) {
            if (c < '1' || c > '9') throw std::invalid_argument("parse: bad digit in '" + s + "'");
            w.push_back(c - '0');
        }
    } else {
        std::istringstream in(s);
        std::string tok;
        while (std::getline(in, tok, ',')) w.push_back(std::stoi(tok));
    }
    return from_word(std::move(w));
}

int DescentSet::count() const { return std::popcount(mask); }

std::vector<int> DescentSet::positions() const {
    std::vector<int> out;
    for (int i = 1; i < n; ++i)
        if ((mask >> (i - 1)) & 1u) out.push_back(i);
    return out;
}

std::string DescentSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : positions()) {
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

int Composition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Composition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

DescentSet descents(const Permutation& p) {
    const auto& w = p.word();
    DescentSet d{p.degree(), 0};
    for (int i = 1; i < p.degree(); ++i)
        if (w[static_cast<std::size_t>(i) - 1] > w[static_cast<std::size_t>(i)])
            d.mask |= std::uint64_t{1} << (i - 1);
    return d;
}

DescentSet recoils(const Permutation& p) { return descents(inverse(p)); }

Permutation inverse(const Permutation& p) {
    const auto& w = p.word();
    std::vector<int> q(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        q[static_cast<std::size_t>(w[i]) - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(q), Permutation::trusted_tag{});
}

Permutation standardize(const std::vector<int>& word) {
    const std::size_t n = word.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
    for (std::size_t r = 1; r < n; ++r)
        if (word[order[r]] == word[order[r - 1]])
            throw std::invalid_argument("standardize: repeated letter");
    std::vector<int> w(n);
    for (std::size_t r = 0; r < n; ++r) w[order[r]] = static_cast<int>(r) + 1;
    return Permutation(std::move(w), Permutation::trusted_tag{});
}

int sign_at(const Permutation& p, int i) {
    const int n = p.degree();
    if (i < 1 || i > n) throw std::out_of_range("sign_at: letter out of range");
    const auto& w = p.word();
    std::size_t pos = 0;
    while (w[pos] != i) ++pos;
    // neighbours in the padded word (n+1) . w . 0
    const int u = pos == 0 ? n + 1 : w[pos - 1];
    const int v = pos + 1 == w.size() ? 0 : w[pos + 1];
    if (u < i && i < v) return 1;
    if (u > i && i > v) return -1;
    return 0;
}

Permutation delete_letter(const Permutation& p, int i) {
    const int n = p.degree();
    if (i < 1 || i > n) throw std::out_of_range("delete_letter: letter out of range");
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n) - 1);
    for (int v : p.word())
        if (v != i) rest.push_back(v);
    return standardize(rest);
}

namespace {

void interleave(const std::vector<int>& a, const std::vector<int>& b, std::size_t ia,
                std::size_t ib, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (ia == a.size() && ib == b.size()) {
        out.push_back(cur);
        return;
    }
    if (ia < a.size()) {
        cur.push_back(a[ia]);
        interleave(a, b, ia + 1, ib, cur, out);
        cur.pop_back();
    }
    if (ib < b.size()) {
        cur.push_back(b[ib]);
        interleave(a, b, ia, ib + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Permutation> shifted_shuffle(const Permutation& a, const Permutation& b) {
    const int k = a.degree();
    std::vector<int> bs = b.word();
    for (int& v : bs) v += k;
    std::vector<std::vector<int>> words;
    std::vector<int> cur;
    cur.reserve(a.word().size() + bs.size());
    interleave(a.word(), bs, 0, 0, cur, words);
    std::sort(words.begin(), words.end());
    std::vector<Permutation> out;
    out.reserve(words.size());
    for (auto& w : words) out.emplace_back(Permutation(std::move(w), Permutation::trusted_tag{}));
    return out;
}

Composition descent_composition(const Permutation& p) {
    Composition c;
    if (p.degree() == 0) return c;
    int prev = 0;
    for (int d : descents(p).positions()) {
        c.parts.push_back(d - prev);
        prev = d;
    }
    c.parts.push_back(p.degree() - prev);
    return c;
}

DescentSet composition_descents(const Composition& c) {
    DescentSet d{c.sum(), 0};
    int acc = 0;
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (c.parts[i] < 1) throw std::invalid_argument("composition_descents: nonpositive part");
        if (i + 1 == c.parts.size()) break;
        acc += c.parts[i];
        d.mask |= std::uint64_t{1} << (acc - 1);
    }
    return d;
}

Composition composition_from_descent_mask(int n, std::uint64_t mask) {
    if (n < 0) throw std::invalid_argument("composition_from_descent_mask: negative n");
    if (n > 0 && (mask >> (n - 1)) != 0)
        throw std::invalid_argument("composition_from_descent_mask: mask out of range");
    Composition c;
    if (n == 0) return c;
    int prev = 0;
    for (int i = 1; i < n; ++i) {
        if ((mask >> (i - 1)) & 1u) {
            c.parts.push_back(i - prev);
            prev = i;
        }
    }
    c.parts.push_back(n - prev);
    return c;
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial: out of uint64 range");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace dehornoy
