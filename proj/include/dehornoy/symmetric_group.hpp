#pragma once

#include <cstdint>
#include <vector>

#include "dehornoy/permutation.hpp"

namespace dehornoy {

// Enumeration of S_n in lexicographic one-line order, with precomputed
// descent and recoil masks.  Tables are built once per degree and shared;
// the hard cap keeps the largest table (9! rows) within memory.
class SymmetricGroupTable {
public:
    static constexpr int max_degree = 9;

    static const SymmetricGroupTable& get(int n);

    int degree() const { return n_; }
    std::size_t size() const { return perms_.size(); }
    const std::vector<Permutation>& perms() const { return perms_; }
    const Permutation& perm(std::size_t idx) const { return perms_[idx]; }
    std::uint64_t des_mask(std::size_t idx) const { return des_[idx]; }
    std::uint64_t rec_mask(std::size_t idx) const { return rec_[idx]; }

    // Lexicographic rank via the Lehmer code, O(n^2).
    std::size_t index_of(const Permutation& p) const;

private:
    explicit SymmetricGroupTable(int n);

    int n_;
    std::vector<Permutation> perms_;
    std::vector<std::uint64_t> des_;
    std::vector<std::uint64_t> rec_;
};

}  // namespace dehornoy
