#include "bierkit/scomplex/bier.hpp"

#include "bierkit/exactla/error.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace bierkit::scomplex {

namespace {

bool facet_less(const BierFacet& a, const BierFacet& b) {
    if (a.unbarred != b.unbarred) return face_lex_less(a.unbarred, b.unbarred);
    return face_lex_less(a.barred, b.barred);
}

}  // namespace

BierSphere::BierSphere(int n, std::vector<BierFacet> facets) : n_(n), facets_(std::move(facets)) {
    std::sort(facets_.begin(), facets_.end(), facet_less);
}

SetMask vertex_set(const BierFacet& f, int n) {
    return SetMask{f.unbarred} | (SetMask{f.barred} << n);
}

std::vector<int> signed_labels(const BierFacet& f) {
    std::vector<int> out = face_elements(f.unbarred);
    for (int e : face_elements(f.barred)) out.push_back(-e);
    return out;
}

std::vector<SetMask> BierSphere::vertex_sets() const {
    std::vector<SetMask> out;
    out.reserve(facets_.size());
    for (const auto& f : facets_) out.push_back(vertex_set(f, n_));
    return out;
}

SetMask BierSphere::used_vertices() const {
    SetMask m = 0;
    for (const auto& f : facets_) m |= vertex_set(f, n_);
    return m;
}

std::vector<std::vector<int>> BierSphere::signed_facets() const {
    std::vector<std::vector<int>> out;
    out.reserve(facets_.size());
    for (const auto& f : facets_) out.push_back(signed_labels(f));
    return out;
}

std::vector<std::pair<int, int>> BierSphere::edges() const {
    std::set<std::pair<int, int>> seen;
    for (const auto& f : facets_) {
        const auto idx = elements(vertex_set(f, n_));
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j) seen.emplace(idx[i], idx[j]);
    }
    std::vector<std::pair<int, int>> out;
    out.reserve(seen.size());
    for (auto [a, b] : seen) out.emplace_back(index_label(a, n_), index_label(b, n_));
    return out;
}

BierSphere BierSphere::bar_swapped() const {
    std::vector<BierFacet> swapped;
    swapped.reserve(facets_.size());
    for (const auto& f : facets_) swapped.push_back({f.barred, f.unbarred});
    return BierSphere(n_, std::move(swapped));
}

BierSphere bier_sphere(const SimplicialComplex& k) {
    if (k.is_void()) throw DomainError("bier_sphere: void complex has no Bier sphere");
    if (k.is_full_simplex()) throw DomainError("bier_sphere: K is the full simplex, its Alexander dual is void");
    const int n = k.n();
    const SimplicialComplex dual = alexander_dual(k);
    const FaceMask full = ground_mask(n);
    std::vector<BierFacet> facets;
    for (int m = 0; m < n; ++m) {
        const FaceMask rest = full & ~(FaceMask{1} << m);
        // Every split of [n] \ {m} into A and B = complement.
        for (FaceMask a = rest;; a = (a - 1) & rest) {
            const FaceMask b = rest & ~a;
            if (k.contains(a) && dual.contains(b)) facets.push_back({a, b});
            if (a == 0) break;
        }
    }
    return BierSphere(n, std::move(facets));
}

SphereCheck check_sphere(const BierSphere& s) {
    const auto sets = s.vertex_sets();
    return check_sphere_family(sets);
}

}  // namespace bierkit::scomplex
