#ifndef SPECHT_PERMGROUP_HPP
#define SPECHT_PERMGROUP_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "specht/combinatorics.hpp"

namespace specht {

// Bijection of {1..n}; images[k-1] is the image of k.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images); // validates bijectivity

    static Permutation identity(int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
    const std::vector<int>& images() const { return images_; }
    bool is_identity() const;

    auto operator<=>(const Permutation&) const = default;

    // Disjoint-cycle notation, "()" for the identity.
    std::string to_cycle_string() const;

private:
    std::vector<int> images_;
};

// Cycle-notation parser: products of cycles like "(1,2)(3,4)", applied left to
// right. Whitespace-insensitive; "" and "()" denote the identity.
Permutation parse_permutation(const std::string& text, int degree);

// (a o b)(k) = a(b(k)). The single composition convention used everywhere.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);

// Multiset of cycle lengths, fixed points included, sorted decreasing.
Partition cycle_type(const Permutation& a);

struct ConjugacyClass {
    Permutation representative; // lexicographically least image sequence
    std::uint64_t size = 0;
    Partition cycle_type;
};

// Group generated by explicit permutations of a fixed degree. Elements are
// materialized lazily by breadth-first closure, bounded by a configurable cap.
class PermutationGroup {
public:
    PermutationGroup(int degree, std::vector<Permutation> generators,
                     std::uint64_t element_cap = 1'000'000);

    PermutationGroup(const PermutationGroup& other);
    PermutationGroup& operator=(const PermutationGroup& other);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    const std::vector<Permutation>& elements() const; // sorted by image sequence
    std::uint64_t order() const;
    std::vector<ConjugacyClass> conjugacy_classes() const; // sorted by representative

private:
    int degree_;
    std::vector<Permutation> generators_;
    std::uint64_t element_cap_;

    mutable std::mutex mutex_;
    mutable std::optional<std::vector<Permutation>> elements_;
};

// Action of S_m on the C(m,2) unordered pairs of {1..m}, pairs ordered
// lexicographically and numbered from 1. Degree C(m,2), order m!.
PermutationGroup edge_action_group(int m);

// The sign-twisted double action: S_m permutes two copies of {1..m}, with odd
// permutations also swapping the copies. Point (i, copy c) is numbered
// i + (c-1)*m. Degree 2m, order m!; for m = 5 this is the classical
// degree-10 transitive group of order 120 that is not the pair action.
PermutationGroup sign_twisted_double_group(int m);

// S_n as <(1,2), (1,...,n)>; degree-1 corner cases yield the trivial group.
PermutationGroup symmetric_group(int n);

} // namespace specht

#endif
