#include "bierkit/scomplex/family.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace bierkit::scomplex {

std::vector<int> elements(SetMask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(__builtin_ctzll(m));
        m &= m - 1;
    }
    return out;
}

SetMask map_set(SetMask s, std::span<const int> perm) {
    SetMask out = 0;
    while (s) {
        out |= SetMask{1} << perm[static_cast<std::size_t>(__builtin_ctzll(s))];
        s &= s - 1;
    }
    return out;
}

std::vector<SetMask> sorted_family(std::span<const SetMask> family) {
    std::vector<SetMask> out(family.begin(), family.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct FamilyIndex {
    int n = 0;
    std::vector<std::vector<int>> profile;        // sorted sizes of sets containing v
    std::vector<std::vector<int>> codegree;       // sets containing both u and v
    std::vector<std::vector<SetMask>> sets_of;    // sets containing v

    FamilyIndex(int n_, std::span<const SetMask> family)
        : n(n_), profile(static_cast<std::size_t>(n_)),
          codegree(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_), 0)),
          sets_of(static_cast<std::size_t>(n_)) {
        for (SetMask s : family) {
            const auto elems = elements(s);
            for (int u : elems) {
                profile[static_cast<std::size_t>(u)].push_back(popcount(s));
                sets_of[static_cast<std::size_t>(u)].push_back(s);
                for (int v : elems) ++codegree[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            }
        }
        for (auto& p : profile) std::sort(p.begin(), p.end());
    }
};

class IsoSearch {
public:
    IsoSearch(int n, std::span<const SetMask> a, std::span<const SetMask> b)
        : n_(n), a_(n, a), b_(n, b), b_sets_(b.begin(), b.end()), a_family_(a.begin(), a.end()),
          b_family_(sorted_family(b)) {
        order_ = vertex_order();
        perm_.assign(static_cast<std::size_t>(n), -1);
        used_.assign(static_cast<std::size_t>(n), false);
    }

    std::optional<std::vector<int>> run() {
        if (extend(0)) return perm_;
        return std::nullopt;
    }

private:
    // Greedy order: each next vertex shares the most sets with those chosen.
    std::vector<int> vertex_order() const {
        std::vector<int> order;
        std::vector<bool> taken(static_cast<std::size_t>(n_), false);
        for (int step = 0; step < n_; ++step) {
            int best = -1;
            long best_score = -1;
            for (int v = 0; v < n_; ++v) {
                if (taken[static_cast<std::size_t>(v)]) continue;
                long score = 0;
                for (int u : order) score += a_.codegree[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
                score = score * 1024 + static_cast<long>(a_.profile[static_cast<std::size_t>(v)].size());
                if (score > best_score) {
                    best = v;
                    best_score = score;
                }
            }
            taken[static_cast<std::size_t>(best)] = true;
            order.push_back(best);
        }
        return order;
    }

    bool consistent(int v, int w, SetMask assigned) const {
        const auto vi = static_cast<std::size_t>(v);
        const auto wi = static_cast<std::size_t>(w);
        if (a_.profile[vi] != b_.profile[wi]) return false;
        if (a_.codegree[vi][vi] != b_.codegree[wi][wi]) return false;
        for (int u : elements(assigned)) {
            const auto ui = static_cast<std::size_t>(u);
            if (a_.codegree[ui][vi] != b_.codegree[static_cast<std::size_t>(perm_[ui])][wi]) return false;
        }
        return true;
    }

    bool completed_sets_map_into_b(int v, SetMask assigned) const {
        for (SetMask s : a_.sets_of[static_cast<std::size_t>(v)]) {
            if ((s & ~assigned) != 0) continue;
            if (!b_sets_.count(map_set(s, perm_))) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) {
            std::vector<SetMask> image;
            image.reserve(a_family_.size());
            for (SetMask s : a_family_) image.push_back(map_set(s, perm_));
            return sorted_family(image) == b_family_;
        }
        const int v = order_[depth];
        SetMask assigned = 0;
        for (std::size_t k = 0; k < depth; ++k) assigned |= SetMask{1} << order_[k];
        for (int w = 0; w < n_; ++w) {
            if (used_[static_cast<std::size_t>(w)] || !consistent(v, w, assigned)) continue;
            perm_[static_cast<std::size_t>(v)] = w;
            used_[static_cast<std::size_t>(w)] = true;
            if (completed_sets_map_into_b(v, assigned | (SetMask{1} << v)) && extend(depth + 1)) return true;
            used_[static_cast<std::size_t>(w)] = false;
            perm_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    int n_;
    FamilyIndex a_;
    FamilyIndex b_;
    std::unordered_set<SetMask> b_sets_;
    std::vector<SetMask> a_family_;
    std::vector<SetMask> b_family_;
    std::vector<int> order_;
    std::vector<int> perm_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<int>> find_family_isomorphism(int n, std::span<const SetMask> a,
                                                        std::span<const SetMask> b) {
    if (n < 0 || n > 64) return std::nullopt;
    const auto sa = sorted_family(a);
    const auto sb = sorted_family(b);
    if (sa.size() != sb.size()) return std::nullopt;
    std::vector<int> size_a, size_b;
    for (auto s : sa) size_a.push_back(popcount(s));
    for (auto s : sb) size_b.push_back(popcount(s));
    std::sort(size_a.begin(), size_a.end());
    std::sort(size_b.begin(), size_b.end());
    if (size_a != size_b) return std::nullopt;
    const SetMask range = n == 64 ? ~SetMask{0} : ((SetMask{1} << n) - 1);
    for (auto s : sa)
        if (s & ~range) return std::nullopt;
    for (auto s : sb)
        if (s & ~range) return std::nullopt;
    return IsoSearch(n, sa, sb).run();
}

SphereCheck check_sphere_family(std::span<const SetMask> facets) {
    SphereCheck out;
    if (facets.empty()) {
        out.pure = false;
        return out;
    }
    const int size = popcount(facets.front());
    for (auto f : facets)
        if (popcount(f) != size) out.pure = false;

    std::unordered_map<SetMask, int> ridge_count;
    for (auto f : facets)
        for (int v : elements(f)) ++ridge_count[f & ~(SetMask{1} << v)];
    for (const auto& [ridge, count] : ridge_count)
        if (count != 2) out.pseudomanifold = false;

    std::unordered_set<SetMask> faces;
    for (auto f : facets) {
        // Enumerate all non-empty subsets of f.
        for (SetMask s = f; s; s = (s - 1) & f) faces.insert(s);
    }
    out.f_vector.assign(static_cast<std::size_t>(size), 0);
    for (auto s : faces) ++out.f_vector[static_cast<std::size_t>(popcount(s) - 1)];
    for (std::size_t j = 0; j < out.f_vector.size(); ++j)
        out.euler += (j % 2 == 0 ? 1L : -1L) * static_cast<long>(out.f_vector[j]);
    const int dim = size - 1;
    out.expected_euler = 1 + (dim % 2 == 0 ? 1 : -1);
    return out;
}

}  // namespace bierkit::scomplex
