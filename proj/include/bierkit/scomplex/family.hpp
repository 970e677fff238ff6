#pragma once

// Combinatorics on families of finite sets encoded as 64-bit masks over a
// vertex range [0, n). Shared by simplicial complexes, Bier spheres and
// hull facet lists.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bierkit::scomplex {

using SetMask = std::uint64_t;

inline int popcount(SetMask m) { return __builtin_popcountll(m); }

std::vector<int> elements(SetMask m);  // increasing bit indices

/**
 * Finds a bijection p of [0, n) with {p(F) : F in a} == b, or nullopt.
 *
 * Backtracking over vertices in a connectivity-first order with pruning by
 * per-vertex set-size profiles, pairwise co-occurrence counts and images of
 * completed sets. Candidates are tried in increasing index order, so the
 * result is deterministic.
 */
std::optional<std::vector<int>> find_family_isomorphism(int n, std::span<const SetMask> a,
                                                        std::span<const SetMask> b);

SetMask map_set(SetMask s, std::span<const int> perm);

// Canonically sorted copy (numeric mask order), duplicates removed.
std::vector<SetMask> sorted_family(std::span<const SetMask> family);

struct SphereCheck {
    bool pure = true;            // all facets of one size
    bool pseudomanifold = true;  // each ridge in exactly two facets
    std::vector<std::size_t> f_vector;  // f_0, f_1, ... (non-empty faces)
    long euler = 0;              // f_0 - f_1 + f_2 - ...
    long expected_euler = 0;     // 1 + (-1)^dim of the sphere
    bool ok() const { return pure && pseudomanifold && euler == expected_euler; }
};

// Checks that a pure family looks like a triangulated sphere of dimension
// (facet size - 1): pseudomanifold ridges and the sphere's Euler number.
SphereCheck check_sphere_family(std::span<const SetMask> facets);

}  // namespace bierkit::scomplex
