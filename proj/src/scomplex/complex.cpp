#include "bierkit/scomplex/complex.hpp"

#include "bierkit/exactla/error.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace bierkit::scomplex {

FaceMask face_of(const std::vector<int>& elems) {
    FaceMask m = 0;
    for (int e : elems) m |= FaceMask{1} << (e - 1);
    return m;
}

std::vector<int> face_elements(FaceMask f) {
    std::vector<int> out;
    while (f) {
        out.push_back(__builtin_ctz(f) + 1);
        f &= f - 1;
    }
    return out;
}

bool face_lex_less(FaceMask a, FaceMask b) {
    while (a && b) {
        const int ea = __builtin_ctz(a);
        const int eb = __builtin_ctz(b);
        if (ea != eb) return ea < eb;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

bool SimplicialComplex::contains(FaceMask face) const {
    for (auto f : facets_)
        if ((face & ~f) == 0) return true;
    return false;
}

std::vector<FaceMask> SimplicialComplex::faces() const {
    std::unordered_set<FaceMask> all;
    for (auto f : facets_) {
        for (FaceMask s = f;; s = (s - 1) & f) {
            all.insert(s);
            if (s == 0) break;
        }
    }
    std::vector<FaceMask> out(all.begin(), all.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FaceMask> SimplicialComplex::minimal_nonfaces() const {
    if (is_void()) return {0};
    std::vector<FaceMask> out;
    std::vector<FaceMask> level = {0};
    while (!level.empty()) {
        std::vector<FaceMask> next;
        for (FaceMask f : level) {
            const int top = f ? 31 - __builtin_clz(f) : -1;
            for (int e = top + 1; e < n_; ++e) {
                const FaceMask s = f | (FaceMask{1} << e);
                bool boundary_in_k = true;
                for (FaceMask rest = s & ~(FaceMask{1} << e); rest; rest &= rest - 1) {
                    if (!contains(s & ~(FaceMask{1} << __builtin_ctz(rest)))) {
                        boundary_in_k = false;
                        break;
                    }
                }
                if (!boundary_in_k) continue;
                if (contains(s))
                    next.push_back(s);
                else
                    out.push_back(s);
            }
        }
        level = std::move(next);
    }
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
}

std::vector<std::vector<int>> SimplicialComplex::facet_lists() const {
    std::vector<std::vector<int>> out;
    out.reserve(facets_.size());
    for (auto f : facets_) out.push_back(face_elements(f));
    return out;
}

SimplicialComplex SimplicialComplex::from_facets_unchecked(int n, std::vector<FaceMask> facets) {
    SimplicialComplex k;
    k.n_ = n;
    k.facets_ = std::move(facets);
    return k;
}

SimplicialComplex make_complex_from_masks(int n, std::vector<FaceMask> faces) {
    if (n < 1 || n > kMaxGround)
        throw ValidationError("ground set size must be in [1, " + std::to_string(kMaxGround) + "], got " +
                              std::to_string(n));
    for (auto f : faces)
        if (f & ~ground_mask(n)) throw ValidationError("face element out of range [1, " + std::to_string(n) + "]");
    if (faces.empty()) faces.push_back(0);
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<FaceMask> maximal;
    for (auto f : faces) {
        bool dominated = false;
        for (auto g : faces)
            if (g != f && (f & ~g) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end(), face_lex_less);
    return SimplicialComplex::from_facets_unchecked(n, std::move(maximal));
}

SimplicialComplex make_complex(int n, const std::vector<std::vector<int>>& faces) {
    std::vector<FaceMask> masks;
    masks.reserve(faces.size());
    for (const auto& face : faces) {
        FaceMask m = 0;
        for (int e : face) {
            if (e < 1 || e > n)
                throw ValidationError("face element " + std::to_string(e) + " out of range [1, " + std::to_string(n) +
                                      "]");
            m |= FaceMask{1} << (e - 1);
        }
        masks.push_back(m);
    }
    return make_complex_from_masks(n, std::move(masks));
}

SimplicialComplex alexander_dual(const SimplicialComplex& k) {
    const FaceMask full = ground_mask(k.n());
    std::vector<FaceMask> facets;
    for (auto b : k.minimal_nonfaces()) facets.push_back(full & ~b);
    std::sort(facets.begin(), facets.end(), face_lex_less);
    return SimplicialComplex::from_facets_unchecked(k.n(), std::move(facets));
}

SimplicialComplex skeleton(int n, int r) {
    if (n < 1 || n > kMaxGround) throw ValidationError("skeleton: ground set size out of range");
    if (r < 0 || r >= n)
        throw DomainError("skeleton: need 0 <= r < n, got n=" + std::to_string(n) + " r=" + std::to_string(r));
    std::vector<FaceMask> facets;
    for (FaceMask s = 0; s <= ground_mask(n); ++s)
        if (__builtin_popcount(s) == r) facets.push_back(s);
    std::sort(facets.begin(), facets.end(), face_lex_less);
    return SimplicialComplex::from_facets_unchecked(n, std::move(facets));
}

SimplicialComplex hemi_icosahedron() {
    return make_complex(6, {{1, 2, 3},
                            {1, 2, 6},
                            {1, 3, 5},
                            {1, 4, 5},
                            {1, 4, 6},
                            {2, 3, 4},
                            {2, 4, 5},
                            {2, 5, 6},
                            {3, 4, 6},
                            {3, 5, 6}});
}

std::optional<std::vector<int>> complexes_isomorphic(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    if (k1.n() != k2.n()) return std::nullopt;
    std::vector<SetMask> a(k1.facets().begin(), k1.facets().end());
    std::vector<SetMask> b(k2.facets().begin(), k2.facets().end());
    auto perm = find_family_isomorphism(k1.n(), a, b);
    if (!perm) return std::nullopt;
    for (auto& p : *perm) p += 1;
    return perm;
}

bool is_maximal_volume(const SimplicialComplex& k) {
    const int n = k.n();
    if (n < 2) return false;
    const int half = n / 2;
    if (n % 2 == 1) return k == skeleton(n, half);
    const auto lower = skeleton(n, half - 1);
    for (auto f : lower.facets())
        if (!k.contains(f)) return false;
    for (auto f : k.facets())
        if (__builtin_popcount(f) > half) return false;
    return true;
}

}  // namespace bierkit::scomplex
