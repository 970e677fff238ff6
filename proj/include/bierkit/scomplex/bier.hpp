#pragma once

#include "bierkit/scomplex/complex.hpp"
#include "bierkit/scomplex/family.hpp"

#include <utility>
#include <vector>

namespace bierkit::scomplex {

/**
 * Signed vertex labels of a Bier sphere: i and -i (written ī) for i in [n].
 * Vertex index layout used everywhere a Bier object meets a point list:
 * label i -> index i-1, label -i -> index n+i-1.
 */
inline int label_index(int label, int n) { return label > 0 ? label - 1 : n - label - 1; }
inline int index_label(int index, int n) { return index < n ? index + 1 : -(index - n + 1); }

struct BierFacet {
    FaceMask unbarred = 0;  // A, a face of K
    FaceMask barred = 0;    // B, a face of K°

    friend bool operator==(const BierFacet&, const BierFacet&) = default;
};

class BierSphere {
public:
    BierSphere() = default;
    BierSphere(int n, std::vector<BierFacet> facets);  // sorts facets

    int n() const { return n_; }
    const std::vector<BierFacet>& facets() const { return facets_; }

    // Facets as masks over the 2n vertex indices.
    std::vector<SetMask> vertex_sets() const;
    SetMask used_vertices() const;
    // Signed-label lists: positives ascending, then barred labels by
    // increasing absolute value.
    std::vector<std::vector<int>> signed_facets() const;
    // Edges as signed-label pairs, in the same per-facet label order.
    std::vector<std::pair<int, int>> edges() const;

    // Relabels i <-> ī.
    BierSphere bar_swapped() const;

    friend bool operator==(const BierSphere&, const BierSphere&) = default;

private:
    int n_ = 0;
    std::vector<BierFacet> facets_;
};

SetMask vertex_set(const BierFacet& f, int n);
std::vector<int> signed_labels(const BierFacet& f);

/**
 * Bier(K) = K *_Δ K°: all (A, B) with A in K, B in K°, A ∩ B = ∅ and
 * |A| + |B| = n - 1. K = {∅} is accepted; the full simplex and the void
 * complex are rejected with DomainError.
 */
BierSphere bier_sphere(const SimplicialComplex& k);

SphereCheck check_sphere(const BierSphere& s);

}  // namespace bierkit::scomplex
