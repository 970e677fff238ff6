#pragma once

#include "bierkit/scomplex/family.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bierkit::scomplex {

// Subset of the ground set [n] = {1..n}; element i is bit i-1.
using FaceMask = std::uint32_t;

inline constexpr int kMaxGround = 16;

FaceMask face_of(const std::vector<int>& elems);  // 1-based labels, unchecked
std::vector<int> face_elements(FaceMask f);       // 1-based, increasing
inline FaceMask ground_mask(int n) { return n == 32 ? ~FaceMask{0} : ((FaceMask{1} << n) - 1); }

// Lexicographic order on the sorted element lists ({1} < {1,2} < {2}).
bool face_lex_less(FaceMask a, FaceMask b);

/**
 * Abstract simplicial complex on [n], stored by its maximal faces.
 *
 * facets() is sorted lexicographically and is an antichain. The complex
 * {emptyset} has facets == {0}; the void complex (no faces at all) has no
 * facets and only arises as the Alexander dual of the full simplex.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    int n() const { return n_; }
    const std::vector<FaceMask>& facets() const { return facets_; }

    bool contains(FaceMask face) const;
    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_.front() == 0; }
    bool is_full_simplex() const { return facets_.size() == 1 && facets_.front() == ground_mask(n_); }
    bool is_proper() const { return !is_void() && !is_full_simplex(); }

    // All faces, by brute force over subsets of facets, sorted numerically.
    std::vector<FaceMask> faces() const;

    // Inclusion-minimal subsets of [n] that are not faces, found level by
    // level from the bottom of the subset lattice.
    std::vector<FaceMask> minimal_nonfaces() const;

    std::vector<std::vector<int>> facet_lists() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

    // Facets must already be a lexicographically sorted antichain.
    static SimplicialComplex from_facets_unchecked(int n, std::vector<FaceMask> facets);

private:
    int n_ = 0;
    std::vector<FaceMask> facets_;
};

/// Downward closure of `faces` on [n], reduced to maximal faces. An empty
/// face list yields {emptyset}. Throws ValidationError on labels outside [n].
SimplicialComplex make_complex(int n, const std::vector<std::vector<int>>& faces);
SimplicialComplex make_complex_from_masks(int n, std::vector<FaceMask> faces);

/// K° = {A : [n] \ A not in K}; facets are complements of minimal non-faces.
SimplicialComplex alexander_dual(const SimplicialComplex& k);

/// All r-subsets of [n] as facets, i.e. the faces of size <= r. 0 <= r < n.
SimplicialComplex skeleton(int n, int r);

/// The 6-vertex, 10-triangle triangulation of the real projective plane.
SimplicialComplex hemi_icosahedron();

/// Permutation p of [n] (p[i-1] = image of i) carrying facets of k1 onto
/// facets of k2, or nullopt.
std::optional<std::vector<int>> complexes_isomorphic(const SimplicialComplex& k1, const SimplicialComplex& k2);

/**
 * Bier-sphere maximal-volume condition: for n = 2k+1, K is exactly the
 * faces of size <= k; for n = 2k, (faces of size <= k-1) ⊆ K ⊆ (faces of
 * size <= k).
 */
bool is_maximal_volume(const SimplicialComplex& k);

}  // namespace bierkit::scomplex
