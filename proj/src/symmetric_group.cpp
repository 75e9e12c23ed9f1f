#include "dehornoy/symmetric_group.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "dehornoy/verify.hpp"

namespace dehornoy {

SymmetricGroupTable::SymmetricGroupTable(int n) : n_(n) {
    const std::size_t size = static_cast<std::size_t>(factorial(n));
    perms_.reserve(size);
    des_.reserve(size);
    rec_.reserve(size);
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        Permutation p = Permutation::from_word(w);
        des_.push_back(descents(p).mask);
        rec_.push_back(recoils(p).mask);
        perms_.push_back(std::move(p));
    } while (std::next_permutation(w.begin(), w.end()));
}

const SymmetricGroupTable& SymmetricGroupTable::get(int n) {
    if (n < 0) throw std::invalid_argument("SymmetricGroupTable: negative degree");
    if (n > max_degree)
        throw BudgetExceeded("symmetric group table for n=" + std::to_string(n) +
                             " exceeds the supported cap n<=" + std::to_string(max_degree));
    static std::array<std::unique_ptr<SymmetricGroupTable>, max_degree + 1> tables;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = tables[static_cast<std::size_t>(n)];
    if (!slot) slot.reset(new SymmetricGroupTable(n));
    return *slot;
}

std::size_t SymmetricGroupTable::index_of(const Permutation& p) const {
    if (p.degree() != n_) throw std::invalid_argument("index_of: degree mismatch");
    const auto& w = p.word();
    std::size_t rank = 0;
    for (int i = 0; i < n_; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n_; ++j)
            if (w[static_cast<std::size_t>(j)] < w[static_cast<std::size_t>(i)]) ++smaller;
        rank += static_cast<std::size_t>(smaller) * factorial(n_ - 1 - i);
    }
    return rank;
}

}  // namespace dehornoy
