#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dehornoy {

// Permutation of {1..n} in one-line notation.  n = 0 is the empty
// permutation and acts as the unit for the shifted shuffle.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n);

    // Validates that word is a bijection on {1..n}; throws std::invalid_argument.
    static Permutation from_word(std::vector<int> word);

    int degree() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }

    // 1-based position access, pos in [1, degree()].
    int letter(int pos) const { return word_[static_cast<std::size_t>(pos) - 1]; }

    bool operator==(const Permutation& o) const { return word_ == o.word_; }
    bool operator!=(const Permutation& o) const { return word_ != o.word_; }

    // Canonical order: by degree, then lexicographically on the word.
    bool operator<(const Permutation& o) const;

    // "132" for n <= 9, "10,2,3,..." otherwise.
    std::string to_string() const;
    static Permutation parse(const std::string& s);

private:
    struct trusted_tag {};
    Permutation(std::vector<int> w, trusted_tag) : word_(std::move(w)) {}

    std::vector<int> word_;

    friend Permutation standardize(const std::vector<int>&);
    friend std::vector<Permutation> shifted_shuffle(const Permutation&, const Permutation&);
    friend Permutation inverse(const Permutation&);
};

// Subset of {1..n-1}, bit i-1 of mask encodes membership of i.
struct DescentSet {
    int n = 0;
    std::uint64_t mask = 0;

    bool contains(int i) const { return i >= 1 && i < n && (mask >> (i - 1)) & 1u; }
    int count() const;
    std::vector<int> positions() const;
    bool subset_of(const DescentSet& o) const { return (mask & ~o.mask) == 0; }

    bool operator==(const DescentSet& o) const { return n == o.n && mask == o.mask; }
    std::string to_string() const;
};

// Composition of n: ordered list of positive parts.
struct Composition {
    std::vector<int> parts;

    int sum() const;
    bool operator==(const Composition& o) const { return parts == o.parts; }

    // "(1,2)"; the empty composition renders as "()".
    std::string to_string() const;
};

DescentSet descents(const Permutation& p);
DescentSet recoils(const Permutation& p);
Permutation inverse(const Permutation& p);

// Word of distinct integers -> the permutation with the same relative order.
// Throws std::invalid_argument on repeated letters.
Permutation standardize(const std::vector<int>& word);

// Sign of letter i inside the padded word (n+1) . p . 0: +1 when the letter
// sits in a rising neighbourhood u < i < v, -1 when in a falling one
// u > i > v, 0 otherwise.  i must lie in [1, degree]; throws std::out_of_range.
int sign_at(const Permutation& p, int i);

// Removes the letter with value i and standardizes the rest.
Permutation delete_letter(const Permutation& p, int i);

// All interleavings of a with b shifted up by degree(a), sorted
// lexicographically.  Size is binomial(deg a + deg b, deg a).
std::vector<Permutation> shifted_shuffle(const Permutation& a, const Permutation& b);

// (d1, d2-d1, ..., n-dk) for descent positions d1 < ... < dk.
Composition descent_composition(const Permutation& p);

// Inverse direction: partial sums of all but the last part.
DescentSet composition_descents(const Composition& c);

// Composition of n with descent positions read off a bitmask
// (bit i-1 set = descent at i).
Composition composition_from_descent_mask(int n, std::uint64_t mask);

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

}  // namespace dehornoy
