#include "eulersign/permutations.hpp"

#include <algorithm>
#include <numeric>

namespace eulersign {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    if (n == 0) throw std::invalid_argument("permutation word must be nonempty");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1])
            throw std::invalid_argument("word is not a bijection of {1..n}");
        seen[static_cast<size_t>(v) - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::reversed() const {
    std::vector<int> rev(word_.rbegin(), word_.rend());
    return Permutation(std::move(rev));
}

Permutation Permutation::top_two_values_swapped() const {
    const int n = size();
    if (n < 2) throw std::invalid_argument("value swap needs n >= 2");
    std::vector<int> w = word_;
    for (int& v : w) {
        if (v == n) v = n - 1;
        else if (v == n - 1) v = n;
    }
    return Permutation(std::move(w));
}

int Permutation::descents() const {
    int d = 0;
    for (size_t i = 0; i + 1 < word_.size(); ++i)
        if (word_[i] > word_[i + 1]) ++d;
    return d;
}

long long Permutation::inversions() const {
    long long inv = 0;
    for (size_t i = 0; i < word_.size(); ++i)
        for (size_t j = i + 1; j < word_.size(); ++j)
            if (word_[i] > word_[j]) ++inv;
    return inv;
}

int Permutation::cycle_count() const {
    std::vector<bool> seen(word_.size(), false);
    int cycles = 0;
    for (int i = 1; i <= size(); ++i) {
        if (seen[static_cast<size_t>(i) - 1]) continue;
        ++cycles;
        int j = i;
        while (!seen[static_cast<size_t>(j) - 1]) {
            seen[static_cast<size_t>(j) - 1] = true;
            j = (*this)(j);
        }
    }
    return cycles;
}

int Permutation::valleys() const {
    int v = 0;
    for (size_t i = 1; i + 1 < word_.size(); ++i)
        if (word_[i - 1] > word_[i] && word_[i] < word_[i + 1]) ++v;
    return v;
}

int Permutation::sign() const { return inversions() % 2 == 0 ? 1 : -1; }

int Permutation::sign_from_cycles() const { return (size() - cycle_count()) % 2 == 0 ? 1 : -1; }

PermutationStats Permutation::statistics() const {
    PermutationStats s;
    s.descents = descents();
    s.ascents = size() - 1 - s.descents;
    s.inversions = inversions();
    s.sign = s.inversions % 2 == 0 ? 1 : -1;
    s.cycles = cycle_count();
    s.valleys = valleys();
    return s;
}

SignedPermutation::SignedPermutation(Permutation underlying, std::vector<bool> negated)
    : underlying_(std::move(underlying)), negated_(std::move(negated)) {
    if (negated_.size() != static_cast<size_t>(underlying_.size()))
        throw std::invalid_argument("negation mask length must equal the degree");
}

SignedPermutation SignedPermutation::identity(int n) {
    return SignedPermutation(Permutation::identity(n), std::vector<bool>(static_cast<size_t>(n), false));
}

int SignedPermutation::negation_count() const {
    return static_cast<int>(std::count(negated_.begin(), negated_.end(), true));
}

SignedPermutation SignedPermutation::inverse() const {
    const int n = size();
    std::vector<int> inv_word(static_cast<size_t>(n));
    std::vector<bool> inv_neg(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int v = (*this)(i);
        const int av = v < 0 ? -v : v;
        inv_word[static_cast<size_t>(av) - 1] = i;
        inv_neg[static_cast<size_t>(av) - 1] = v < 0;
    }
    return SignedPermutation(Permutation(std::move(inv_word)), std::move(inv_neg));
}

SignedPermutation SignedPermutation::all_negated() const {
    std::vector<bool> flipped(negated_.size());
    for (size_t i = 0; i < negated_.size(); ++i) flipped[i] = !negated_[i];
    return SignedPermutation(underlying_, std::move(flipped));
}

int SignedPermutation::descents_b() const {
    int d = 0;
    int prev = 0;  // virtual w(0) = 0
    for (int i = 1; i <= size(); ++i) {
        const int cur = (*this)(i);
        if (prev > cur) ++d;
        prev = cur;
    }
    return d;
}

long long SignedPermutation::inversions_b() const {
    const int n = size();
    long long inv = 0;
    for (int i = 1; i <= n; ++i) {
        const int wi = (*this)(i);
        if (wi < 0) ++inv;
        for (int j = i + 1; j <= n; ++j) {
            const int wj = (*this)(j);
            if (wi > wj) ++inv;
            if (-wi > wj) ++inv;
        }
    }
    return inv;
}

int SignedPermutation::sign_b() const { return delta() * eta(); }

int SignedPermutation::delta() const { return negation_count() % 2 == 0 ? 1 : -1; }

int SignedPermutation::eta() const { return underlying_.sign(); }

SignedStats SignedPermutation::statistics() const {
    SignedStats s;
    s.descents_b = descents_b();
    s.inversions_b = inversions_b();
    s.delta = delta();
    s.eta = eta();
    s.sign_b = s.delta * s.eta;

    // Signed cycle decomposition: follow i -> |w|(i); a cycle is negative
    // iff the product of the entry signs met along it is -1.
    const int n = size();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    int positive_total = 0;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<size_t>(i) - 1]) continue;
        int len = 0;
        int eps = 1;
        int j = i;
        while (!seen[static_cast<size_t>(j) - 1]) {
            seen[static_cast<size_t>(j) - 1] = true;
            const int v = (*this)(j);
            if (v < 0) eps = -eps;
            j = v < 0 ? -v : v;
            ++len;
        }
        if (eps > 0) {
            ++s.positive_cycles[len];
            ++positive_total;
        } else {
            ++s.negative_cycles[len];
        }
    }
    // Reiner's convention: sgn_B(w) = (-1)^(n - sum_i n_i(w)).
    const int alt = (n - positive_total) % 2 == 0 ? 1 : -1;
    if (alt != s.sign_b)
        throw std::logic_error("signed cycle decomposition disagrees with (-1)^|J| sgn(u)");
    return s;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit, int cap) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > cap) throw enumeration_cap_error("S_n", n, cap);
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        visit(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

void for_each_signed_permutation(int n, const std::function<void(const SignedPermutation&)>& visit,
                                 int cap) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > cap) throw enumeration_cap_error("B_n", n, cap);
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        const Permutation u(w);
        std::vector<bool> mask(static_cast<size_t>(n), false);
        for (unsigned long bits = 0; bits < (1ul << n); ++bits) {
            for (int i = 0; i < n; ++i) mask[static_cast<size_t>(i)] = (bits >> i) & 1ul;
            visit(SignedPermutation(u, mask));
        }
    } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace eulersign
