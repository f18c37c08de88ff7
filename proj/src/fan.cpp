#include "torimod/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "torimod/errors.hpp"
#include "torimod/simplex_lp.hpp"

namespace torimod {

namespace {

RatMat columns_matrix(const std::vector<LatticeVector>& rays, const std::vector<int>& idx,
                      int rank) {
    RatMat A(rank, std::vector<Rational>(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j)
        for (int i = 0; i < rank; ++i) A[i][j] = rat(rays[idx[j]][i]);
    return A;
}

int span_rank(const std::vector<LatticeVector>& rays, const std::vector<int>& idx, int rank) {
    return static_cast<int>(rat_rank(columns_matrix(rays, idx, rank)));
}

// Is the subset S (as a bitmask over the cone's local ray list) a face of the
// cone? Decided by feasibility of: m.d = 0 on S, m.d >= 1 off S.
bool is_face_subset(const std::vector<LatticeVector>& rays, const std::vector<int>& cone,
                    unsigned mask, int rank) {
    std::vector<int> off;
    for (size_t t = 0; t < cone.size(); ++t)
        if (!(mask >> t & 1u)) off.push_back(static_cast<int>(t));
    // variables: m+ (rank), m- (rank), slack per off-ray
    size_t nvars = 2 * static_cast<size_t>(rank) + off.size();
    RatMat A;
    std::vector<Rational> b;
    for (size_t t = 0; t < cone.size(); ++t) {
        std::vector<Rational> row(nvars, Rational(0));
        const LatticeVector& d = rays[cone[t]];
        for (int i = 0; i < rank; ++i) {
            row[i] = rat(d[i]);
            row[rank + i] = rat(-d[i]);
        }
        if (mask >> t & 1u) {
            b.push_back(Rational(0));
        } else {
            size_t s = std::find(off.begin(), off.end(), static_cast<int>(t)) - off.begin();
            row[2 * rank + s] = -1;
            b.push_back(Rational(1));
        }
        A.push_back(std::move(row));
    }
    return lp_feasible(std::move(A), std::move(b));
}

// All faces of the cone, each as a sorted list of global ray indices.
std::vector<std::vector<int>> cone_faces(const std::vector<LatticeVector>& rays,
                                         const std::vector<int>& cone, int rank) {
    std::vector<std::vector<int>> out;
    size_t k = cone.size();
    bool simplicial = span_rank(rays, cone, rank) == static_cast<int>(k);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (!simplicial && !is_face_subset(rays, cone, mask, rank)) continue;
        std::vector<int> f;
        for (size_t t = 0; t < k; ++t)
            if (mask >> t & 1u) f.push_back(cone[t]);
        out.push_back(std::move(f));
    }
    return out;
}

// Do the relative interiors of two distinct cones intersect?
bool relints_meet(const std::vector<LatticeVector>& rays, const std::vector<int>& c1,
                  const std::vector<int>& c2, int rank) {
    if (c1.empty() || c2.empty()) return false;  // relint of the zero cone is {0}
    // sum l_i d_i = sum u_j e_j with l,u >= 1; substitute x = coeff - 1 >= 0
    size_t nvars = c1.size() + c2.size();
    RatMat A(rank, std::vector<Rational>(nvars, Rational(0)));
    std::vector<Rational> b(rank, Rational(0));
    for (size_t j = 0; j < c1.size(); ++j)
        for (int i = 0; i < rank; ++i) {
            A[i][j] = rat(rays[c1[j]][i]);
            b[i] -= rat(rays[c1[j]][i]);
        }
    for (size_t j = 0; j < c2.size(); ++j)
        for (int i = 0; i < rank; ++i) {
            A[i][c1.size() + j] = rat(-rays[c2[j]][i]);
            b[i] += rat(rays[c2[j]][i]);
        }
    return lp_feasible(std::move(A), std::move(b));
}

}  // namespace

Fan::Fan(int rank, std::vector<LatticeVector> rays, std::vector<std::vector<int>> max_cones)
    : rank_(rank), rays_(std::move(rays)) {
    validate_and_build(max_cones);
}

void Fan::validate_and_build(const std::vector<std::vector<int>>& input_cones) {
    if (rank_ < 1) throw InvalidFan("rank must be positive");
    std::set<LatticeVector> seen;
    for (const auto& d : rays_) {
        if (static_cast<int>(d.size()) != rank_) throw InvalidFan("ray has wrong dimension");
        if (is_zero_vector(d)) throw InvalidFan("zero ray");
        if (d != primitive(d)) throw InvalidFan("ray is not primitive");
        if (!seen.insert(d).second) throw InvalidFan("duplicate ray");
    }
    if (input_cones.empty()) throw InvalidFan("no cones given");

    std::vector<bool> used(rays_.size(), false);
    std::set<std::vector<int>> face_set;
    std::vector<std::vector<int>> normalized;
    for (auto cone : input_cones) {
        std::sort(cone.begin(), cone.end());
        if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
            throw InvalidFan("repeated ray index in cone");
        for (int i : cone) {
            if (i < 0 || i >= static_cast<int>(rays_.size()))
                throw InvalidFan("ray index out of range");
            used[i] = true;
        }
        if (cone.size() > 20) throw InvalidFan("cone has too many rays");
        auto faces = cone_faces(rays_, cone, rank_);
        // pointedness = the empty set is a face; extremality of each listed
        // ray = every singleton is a face
        if (faces.size() < cone.size() + 1 || !faces.front().empty())
            throw InvalidFan("cone is not pointed or a listed ray is not extreme");
        size_t singletons = 0;
        for (const auto& f : faces)
            if (f.size() == 1) ++singletons;
        if (singletons != cone.size()) throw InvalidFan("a listed ray is not extreme");
        for (auto& f : faces) face_set.insert(std::move(f));
        normalized.push_back(std::move(cone));
    }
    for (size_t i = 0; i < rays_.size(); ++i)
        if (!used[i]) throw InvalidFan("ray not used by any cone");

    cones_.clear();
    for (const auto& f : face_set)
        cones_.push_back(Cone{f, span_rank(rays_, f, rank_)});
    std::sort(cones_.begin(), cones_.end(), [](const Cone& a, const Cone& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.rays < b.rays;
    });

    // maximal = not properly contained (as a ray set) in another cone
    max_cones_.clear();
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
    for (const auto& c : normalized) {
        bool maximal = true;
        for (const auto& other : face_set)
            if (other.size() > c.size() && std::includes(other.begin(), other.end(), c.begin(), c.end()))
                maximal = false;
        if (maximal) max_cones_.push_back(Cone{c, span_rank(rays_, c, rank_)});
    }

    for (size_t i = 0; i < cones_.size(); ++i)
        for (size_t j = i + 1; j < cones_.size(); ++j) {
            const auto& a = cones_[i].rays;
            const auto& b = cones_[j].rays;
            // a cone and its face have disjoint relative interiors a priori
            if (std::includes(b.begin(), b.end(), a.begin(), a.end())) continue;
            if (relints_meet(rays_, a, b, rank_))
                throw InvalidFan("two cones overlap without meeting in a common face");
        }
}

bool Fan::is_complete() const {
    if (complete_) return *complete_;
    int d0 = max_cones_[0].dim;
    for (const auto& c : max_cones_)
        if (c.dim != d0) throw NotPure();
    auto done = [&](bool v) {
        complete_ = v;
        return v;
    };
    if (d0 != rank_) return done(false);

    // every codimension-1 cone is a facet of exactly two maximal cones
    std::vector<const Cone*> walls;
    for (const auto& c : cones_)
        if (c.dim == rank_ - 1) walls.push_back(&c);
    std::vector<std::vector<size_t>> wall_owners(walls.size());
    for (size_t w = 0; w < walls.size(); ++w) {
        for (size_t mc = 0; mc < max_cones_.size(); ++mc) {
            const auto& M = max_cones_[mc].rays;
            const auto& F = walls[w]->rays;
            if (std::includes(M.begin(), M.end(), F.begin(), F.end()))
                wall_owners[w].push_back(mc);
        }
        if (wall_owners[w].size() != 2) return done(false);
    }

    // connectivity through shared facets
    std::vector<int> comp(max_cones_.size(), -1);
    std::vector<size_t> stack = {0};
    comp[0] = 0;
    while (!stack.empty()) {
        size_t cur = stack.back();
        stack.pop_back();
        for (size_t w = 0; w < walls.size(); ++w) {
            if (wall_owners[w][0] != cur && wall_owners[w][1] != cur) continue;
            size_t other = wall_owners[w][0] == cur ? wall_owners[w][1] : wall_owners[w][0];
            if (comp[other] == -1) {
                comp[other] = 0;
                stack.push_back(other);
            }
        }
    }
    for (int c : comp)
        if (c == -1) return done(false);
    return done(true);
}

bool Fan::is_simplicial() const {
    for (const auto& c : max_cones_)
        if (static_cast<int>(c.rays.size()) != c.dim) return false;
    return true;
}

bool Fan::is_smooth() const {
    if (!is_simplicial()) return false;
    for (const auto& c : max_cones_) {
        IntMat A(rank_, std::vector<Integer>(c.rays.size()));
        for (size_t j = 0; j < c.rays.size(); ++j)
            for (int i = 0; i < rank_; ++i) A[i][j] = integer(rays_[c.rays[j]][i]);
        SmithNF s = smith_normal_form(std::move(A));
        for (size_t t = 0; t < c.rays.size(); ++t)
            if (s.S[t][t] != 1) return false;
    }
    return true;
}

namespace {

// Pulling triangulation of a single cone, recursing on its facets.
void pull_triangulate(const std::vector<LatticeVector>& rays, const std::vector<int>& cone,
                      int rank, std::set<std::vector<int>>& out) {
    int dim = span_rank(rays, cone, rank);
    if (static_cast<int>(cone.size()) == dim) {
        out.insert(cone);
        return;
    }
    int v = cone[0];
    auto faces = cone_faces(rays, cone, rank);
    for (const auto& f : faces) {
        if (std::find(f.begin(), f.end(), v) != f.end()) continue;
        if (span_rank(rays, f, rank) != dim - 1) continue;
        std::set<std::vector<int>> sub;
        pull_triangulate(rays, f, rank, sub);
        for (auto simplex : sub) {
            simplex.push_back(v);
            std::sort(simplex.begin(), simplex.end());
            out.insert(std::move(simplex));
        }
    }
}

}  // namespace

Fan Fan::triangulate() const {
    if (is_simplicial()) return *this;
    std::set<std::vector<int>> simplices;
    for (const auto& c : max_cones_) {
        if (static_cast<int>(c.rays.size()) == c.dim)
            simplices.insert(c.rays);
        else
            pull_triangulate(rays_, c.rays, rank_, simplices);
    }
    return Fan(rank_, rays_,
               std::vector<std::vector<int>>(simplices.begin(), simplices.end()));
}

RatMat Fan::ray_matrix(const Cone& c) const { return columns_matrix(rays_, c.rays, rank_); }

std::optional<std::vector<Rational>> Fan::cone_coordinates(const Cone& c,
                                                           const LatticeVector& n) const {
    if (static_cast<int>(c.rays.size()) != c.dim) throw NotSimplicial();
    std::vector<Rational> b(rank_);
    for (int i = 0; i < rank_; ++i) b[i] = rat(n[i]);
    if (c.rays.empty())
        return is_zero_vector(n) ? std::optional<std::vector<Rational>>(std::vector<Rational>{})
                                 : std::nullopt;
    return rat_solve_rect(ray_matrix(c), std::move(b));
}

bool Fan::cone_contains(const Cone& c, const LatticeVector& n) const {
    if (static_cast<int>(c.rays.size()) == c.dim) {
        auto lam = cone_coordinates(c, n);
        if (!lam) return false;
        for (const auto& x : *lam)
            if (x < 0) return false;
        return true;
    }
    RatMat A = ray_matrix(c);
    std::vector<Rational> b(rank_);
    for (int i = 0; i < rank_; ++i) b[i] = rat(n[i]);
    return lp_feasible(std::move(A), std::move(b));
}

std::optional<size_t> Fan::containing_max_cone(const LatticeVector& n) const {
    for (size_t i = 0; i < max_cones_.size(); ++i)
        if (cone_contains(max_cones_[i], n)) return i;
    return std::nullopt;
}

ParallelepipedData parallelepiped(const std::vector<LatticeVector>& cone_rays) {
    size_t k = cone_rays.size();
    size_t r = k ? cone_rays[0].size() : 0;
    ParallelepipedData out;
    out.index = 1;
    if (k == 0) {
        out.points.push_back(LatticeVector{});
        return out;
    }
    RatMat Aq(r, std::vector<Rational>(k));
    IntMat A(r, std::vector<Integer>(k));
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < r; ++i) {
            A[i][j] = integer(cone_rays[j][i]);
            Aq[i][j] = rat(cone_rays[j][i]);
        }
    if (rat_rank(Aq) != k) throw NotSimplicial();

    SmithNF s = smith_normal_form(A);
    IntMat Uinv = unimodular_inverse(s.U);
    std::vector<Integer> divisors(k);
    for (size_t t = 0; t < k; ++t) {
        divisors[t] = s.S[t][t];
        out.index *= divisors[t];
    }

    // enumerate coset representatives y with 0 <= y_t < s_t, map back through
    // U^-1 and reduce into the half-open parallelepiped via fractional parts
    std::set<LatticeVector> pts;
    std::vector<Integer> y(k, 0);
    for (;;) {
        std::vector<Rational> x(r, Rational(0));
        for (size_t i = 0; i < r; ++i)
            for (size_t t = 0; t < k; ++t) x[i] += Rational(Uinv[i][t]) * Rational(y[t]);
        auto lam = rat_solve_rect(Aq, x);
        if (!lam) throw Error("parallelepiped: representative outside span");
        LatticeVector p(r, 0);
        for (size_t t = 0; t < k; ++t) {
            Rational& l = (*lam)[t];
            Integer fl;
            mpz_fdiv_q(fl.get_mpz_t(), l.get_num_mpz_t(), l.get_den_mpz_t());
            l -= Rational(fl);
        }
        // p = A . frac(lambda), entrywise integral by construction
        for (size_t i = 0; i < r; ++i) {
            Rational acc(0);
            for (size_t t = 0; t < k; ++t) acc += (*lam)[t] * rat(cone_rays[t][i]);
            if (acc.get_den() != 1) throw Error("parallelepiped: non-integral point");
            p[i] = static_cast<long long>(mpz_get_si(acc.get_num_mpz_t()));
        }
        pts.insert(p);

        size_t t = 0;
        while (t < k) {
            ++y[t];
            if (y[t] < divisors[t]) break;
            y[t] = 0;
            ++t;
        }
        if (t == k) break;
    }
    if (Integer(static_cast<long>(pts.size())) != out.index)
        throw Error("parallelepiped: point count does not match the index");

    LatticeVector zero(r, 0);
    out.points.push_back(zero);
    for (const auto& p : pts)
        if (p != zero) out.points.push_back(p);
    return out;
}

ParallelepipedData parallelepiped(const Fan& fan, const Cone& c) {
    std::vector<LatticeVector> rays;
    for (int i : c.rays) rays.push_back(fan.ray(i));
    ParallelepipedData out = parallelepiped(rays);
    if (c.rays.empty()) out.points = {LatticeVector(fan.rank(), 0)};
    out.ray_indices = c.rays;
    return out;
}

std::vector<RatMat> superlattices(int r, long p) {
    if (r < 1 || p < 2) throw Error("superlattices: need rank >= 1 and p >= 2");
    std::vector<RatMat> out;
    // normal vectors c in (Z/p)^r with first nonzero entry 1, one per
    // hyperplane; S = (1/p){w : c.w = 0 mod p}
    std::vector<long> c(r, 0);
    auto emit = [&](int j) {
        RatMat basis;
        std::vector<Rational> row(r, Rational(0));
        row[j] = 1;
        basis.push_back(row);
        for (int i = 0; i < r; ++i) {
            if (i == j) continue;
            std::vector<Rational> v(r, Rational(0));
            v[i] = Rational(1, p);
            v[j] = Rational(-c[i], p);
            basis.push_back(std::move(v));
        }
        out.push_back(std::move(basis));
    };
    // iterate over j = position of the leading 1, free entries after it
    for (int j = 0; j < r; ++j) {
        std::fill(c.begin(), c.end(), 0);
        c[j] = 1;
        for (;;) {
            emit(j);
            int t = j + 1;
            while (t < r) {
                if (++c[t] < p) break;
                c[t] = 0;
                ++t;
            }
            if (t == r) break;
        }
    }
    return out;
}

}  // namespace torimod
