#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulersign {

/// Thrown when an enumeration request exceeds the configured cap.
/// The message names both the requested degree and the cap.
class enumeration_cap_error : public std::runtime_error {
public:
    enumeration_cap_error(const std::string& group, int n, int cap)
        : std::runtime_error("enumeration of " + group + " with n=" + std::to_string(n) +
                             " exceeds the configured cap n<=" + std::to_string(cap)),
          n_(n), cap_(cap) {}
    int n() const { return n_; }
    int cap() const { return cap_; }

private:
    int n_;
    int cap_;
};

struct PermutationStats {
    int descents = 0;
    int ascents = 0;
    long long inversions = 0;
    int sign = 1;
    int cycles = 0;
    int valleys = 0;
};

/// A permutation of {1..n} in one-line notation w(1)..w(n).
/// Immutable after construction; all statistics are pure.
class Permutation {
public:
    explicit Permutation(std::vector<int> word);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(word_.size()); }
    /// One-line value w(i), 1 <= i <= n.
    int operator()(int i) const { return word_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    Permutation reversed() const;
    /// Image under the involution exchanging the values n and n-1 (n >= 2).
    Permutation top_two_values_swapped() const;

    int descents() const;
    int ascents() const { return size() - 1 - descents(); }
    long long inversions() const;
    int cycle_count() const;
    /// Interior positions i with w(i-1) > w(i) < w(i+1).
    int valleys() const;
    int sign() const;               // (-1)^inv
    int sign_from_cycles() const;   // (-1)^(n - c)
    PermutationStats statistics() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

struct SignedStats {
    int descents_b = 0;
    long long inversions_b = 0;
    int sign_b = 1;
    int delta = 1;
    int eta = 1;
    std::map<int, int> positive_cycles;  // cycle size -> count
    std::map<int, int> negative_cycles;
};

/// An element of the hyperoctahedral group B_n, stored as an unsigned
/// permutation u together with the set J of barred (negated) positions:
/// w(j) = -u(j) iff j in J.  The mirror values w(-i) = -w(i) are implied.
class SignedPermutation {
public:
    SignedPermutation(Permutation underlying, std::vector<bool> negated);
    static SignedPermutation identity(int n);

    int size() const { return underlying_.size(); }
    /// Signed one-line value w(i), 1 <= i <= n.
    int operator()(int i) const {
        int v = underlying_(i);
        return negated_[static_cast<size_t>(i) - 1] ? -v : v;
    }
    const Permutation& underlying() const { return underlying_; }
    const std::vector<bool>& negated() const { return negated_; }
    int negation_count() const;

    SignedPermutation inverse() const;
    /// The involution w -> w-bar negating every entry.
    SignedPermutation all_negated() const;

    /// Type B descents over i = 0..n-1 with the virtual boundary w(0) = 0.
    int descents_b() const;
    int ascents_b() const { return size() - descents_b(); }
    long long inversions_b() const;
    int sign_b() const;   // (-1)^|J| sgn(u)
    int delta() const;    // (-1)^|J|
    int eta() const;      // sgn(u)
    SignedStats statistics() const;

    bool operator==(const SignedPermutation&) const = default;

private:
    Permutation underlying_;
    std::vector<bool> negated_;
};

inline constexpr int kDefaultSymmetricCap = 10;
inline constexpr int kDefaultHyperoctahedralCap = 7;

/// Visit every element of S_n exactly once in lexicographic one-line order.
/// Throws enumeration_cap_error if n exceeds the cap.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          int cap = kDefaultSymmetricCap);

/// Visit every element of B_n exactly once: lexicographic underlying word,
/// negation masks in binary counter order within each word.
void for_each_signed_permutation(int n, const std::function<void(const SignedPermutation&)>& visit,
                                 int cap = kDefaultHyperoctahedralCap);

}  // namespace eulersign
