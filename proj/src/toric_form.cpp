#include "torimod/toric_form.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "torimod/errors.hpp"
#include "torimod/intersection.hpp"
#include "torimod/simplex_lp.hpp"

namespace torimod {

namespace {

long norm_residue(long long v, long l) {
    long r = long(v % l);
    return r < 0 ? r + long(l) : r;
}

// Shared expansion core. Works in the group ring Z[Z/l]: a coefficient of
// q^n is a length-l integer vector of zeta-power multiplicities, reduced to
// a Cyclotomic only at the end. Factors with negative exponent are first
// rewritten as -zeta^{-res} q^{-e} / (1 - zeta^{-res} q^{-e}).
struct RawExpansion {
    long long base = 0;
    std::vector<std::vector<long long>> rows;  // rows[n - base][residue]
    Cyclotomic scalar;                         // product over exponent-0 factors

    RawExpansion(unsigned level) : scalar(Cyclotomic::one(level)) {}
};

RawExpansion expand_raw(long l, const std::vector<std::pair<long, long long>>& num,
                        const std::vector<std::pair<long, long long>>& den, long prec) {
    RawExpansion out{unsigned(l)};
    if (num.empty()) return out;

    long long offset_exp = 0;
    long offset_res = 0;
    int neg_count = 0;
    std::vector<std::pair<long long, long>> factors;  // (step > 0, residue)
    for (auto [res, e] : den) {
        long r = norm_residue(res, l);
        if (e > 0) {
            factors.push_back({e, r});
        } else if (e < 0) {
            offset_exp += -e;
            offset_res = (offset_res + (l - r) % l) % l;
            ++neg_count;
            factors.push_back({-e, long((l - r) % l)});
        } else {
            if (r == 0) throw PoleOnContinuation();
            out.scalar = out.scalar *
                cyc_inv(Cyclotomic::one(unsigned(l)) - Cyclotomic::zeta_power(unsigned(l), r));
        }
    }

    long long min_num = num.front().second;
    for (const auto& t : num) min_num = std::min(min_num, t.second);
    out.base = offset_exp + min_num;
    if (out.base > prec) return out;
    long long K = prec - out.base;

    // product of the geometric factors, exponents 0..K
    std::vector<std::vector<long long>> D(size_t(K + 1), std::vector<long long>(size_t(l), 0));
    D[0][0] = 1;
    for (auto [step, res] : factors)
        for (long long t = step; t <= K; ++t)
            for (long j = 0; j < l; ++j)
                D[size_t(t)][size_t(j)] += D[size_t(t - step)][size_t((j - res + l) % l)];

    long long sgn = (neg_count % 2 == 0) ? 1 : -1;
    out.rows.assign(size_t(K + 1), std::vector<long long>(size_t(l), 0));
    for (auto [res_p, e_p] : num) {
        long rp = (norm_residue(res_p, l) + offset_res) % l;
        for (long long n = out.base; n <= prec; ++n) {
            long long t = n - offset_exp - e_p;
            if (t < 0 || t > K) continue;
            auto& row = out.rows[size_t(n - out.base)];
            const auto& src = D[size_t(t)];
            for (long j = 0; j < l; ++j) row[size_t((j + rp) % l)] += sgn * src[size_t(j)];
        }
    }
    return out;
}

Cyclotomic row_to_cyc(const std::vector<long long>& row,
                      const std::vector<Cyclotomic>& zeta_table) {
    unsigned L = zeta_table[0].level();
    Cyclotomic acc = Cyclotomic::zero(L);
    for (size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) acc += zeta_table[j] * rat(row[j]);
    return acc;
}

std::vector<Cyclotomic> zeta_powers(long l) {
    std::vector<Cyclotomic> out;
    for (long j = 0; j < l; ++j) out.push_back(Cyclotomic::zeta_power(unsigned(l), j));
    return out;
}

// Per-fan data for the sum over m: parallelepiped points and scaled-degree
// residues of every cone, computed once.
struct LatticePipeline {
    long l;
    int rank;
    const Fan& fan;
    std::vector<Cyclotomic> zeta;
    struct ConeTable {
        std::vector<int> ray_idx;
        std::vector<long> ray_res;
        std::vector<std::pair<long, LatticeVector>> pts;  // (residue, point)
        int sign;
    };
    std::vector<ConeTable> tables;

    explicit LatticePipeline(const DegreeFunction& deg)
        : l(deg.level()), rank(deg.fan().rank()), fan(deg.fan()), zeta(zeta_powers(l)) {
        if (!fan.is_complete()) throw Error("fan must be complete");
        if (!fan.is_simplicial()) throw NotSimplicial();
        for (const Cone& c : fan.cones()) {
            ConeTable t;
            t.ray_idx = c.rays;
            for (int i : c.rays) t.ray_res.push_back(norm_residue(deg.value(i), l));
            if (c.rays.empty()) {
                t.pts.push_back({0, LatticeVector(size_t(rank), 0)});
            } else {
                ParallelepipedData pp = parallelepiped(fan, c);
                for (const auto& p : pp.points)
                    t.pts.push_back({norm_residue(deg.scaled(p), l), p});
            }
            t.sign = (fan.codim(c) % 2 == 0) ? 1 : -1;
            tables.push_back(std::move(t));
        }
    }

    // adds r(q, m) into counts[n][res] (scalar-free cones) and extra[n]
    void accumulate(const LatticeVector& m, long prec,
                    std::vector<std::vector<long long>>& counts,
                    std::vector<Cyclotomic>& extra) const {
        for (const ConeTable& t : tables) {
            std::vector<std::pair<long, long long>> num, den;
            for (const auto& [res, p] : t.pts) num.push_back({res, dot(m, p)});
            for (size_t i = 0; i < t.ray_idx.size(); ++i)
                den.push_back({t.ray_res[i], dot(m, fan.ray(t.ray_idx[i]))});
            RawExpansion raw = expand_raw(l, num, den, prec);
            if (raw.base < 0) throw NegativeValuation();
            bool plain = raw.scalar == Cyclotomic::one(unsigned(l));
            for (size_t i = 0; i < raw.rows.size(); ++i) {
                long long n = raw.base + (long long)i;
                if (plain) {
                    for (long j = 0; j < l; ++j)
                        counts[size_t(n)][size_t(j)] += t.sign * raw.rows[i][size_t(j)];
                } else {
                    Cyclotomic c = row_to_cyc(raw.rows[i], zeta) * raw.scalar;
                    extra[size_t(n)] += t.sign < 0 ? -c : c;
                }
            }
        }
    }

    QSeries r_of_m(const LatticeVector& m, long prec) const {
        std::vector<std::vector<long long>> counts(size_t(prec + 1),
                                                   std::vector<long long>(size_t(l), 0));
        std::vector<Cyclotomic> extra(size_t(prec + 1), Cyclotomic::zero(unsigned(l)));
        accumulate(m, prec, counts, extra);
        std::vector<Cyclotomic> coeffs;
        for (long n = 0; n <= prec; ++n)
            coeffs.push_back(row_to_cyc(counts[size_t(n)], zeta) + extra[size_t(n)]);
        return QSeries(unsigned(l), 0, prec, std::move(coeffs));
    }
};

// primitive generator of the nullspace of (r-1) independent rows, or nullopt
std::optional<LatticeVector> primitive_nullvector(const std::vector<LatticeVector>& rows, int r) {
    RatMat A;
    for (const auto& row : rows) {
        std::vector<Rational> rr;
        for (long long v : row) rr.push_back(rat(v));
        A.push_back(std::move(rr));
    }
    // Gauss-Jordan; expect rank r-1 and a single free column
    size_t nr = A.size(), piv_row = 0;
    std::vector<int> pivot_of_col(size_t(r), -1);
    for (int col = 0; col < r && piv_row < nr; ++col) {
        size_t sel = piv_row;
        while (sel < nr && A[sel][size_t(col)] == 0) ++sel;
        if (sel == nr) continue;
        std::swap(A[sel], A[piv_row]);
        Rational p = A[piv_row][size_t(col)];
        for (auto& v : A[piv_row]) v /= p;
        for (size_t i = 0; i < nr; ++i) {
            if (i == piv_row || A[i][size_t(col)] == 0) continue;
            Rational f = A[i][size_t(col)];
            for (int j = 0; j < r; ++j) A[i][size_t(j)] -= f * A[piv_row][size_t(j)];
        }
        pivot_of_col[size_t(col)] = int(piv_row);
        ++piv_row;
    }
    if (piv_row != size_t(r - 1)) return std::nullopt;
    int free_col = -1;
    for (int j = 0; j < r; ++j)
        if (pivot_of_col[size_t(j)] < 0) free_col = j;
    std::vector<Rational> x(size_t(r), Rational(0));
    x[size_t(free_col)] = 1;
    for (int j = 0; j < r; ++j)
        if (pivot_of_col[size_t(j)] >= 0)
            x[size_t(j)] = -A[size_t(pivot_of_col[size_t(j)])][size_t(free_col)];
    Integer lcm = 1;
    for (const auto& v : x) {
        Integer d = v.get_den();
        lcm = lcm / gcd(lcm, d) * d;
    }
    LatticeVector u(size_t(r), 0);
    for (int j = 0; j < r; ++j) {
        Rational v = x[size_t(j)] * Rational(lcm);
        v.canonicalize();
        u[size_t(j)] = v.get_num().get_si();
    }
    return primitive(std::move(u));
}

std::vector<LatticeVector> subset_sums(const std::vector<LatticeVector>& rays, int r) {
    if (rays.size() > 16) throw Error("too many rays for subset-sum hull");
    std::set<LatticeVector> out;
    for (size_t mask = 0; mask < (size_t(1) << rays.size()); ++mask) {
        LatticeVector s(size_t(r), 0);
        for (size_t i = 0; i < rays.size(); ++i)
            if (mask & (size_t(1) << i))
                for (int j = 0; j < r; ++j) s[size_t(j)] += rays[i][size_t(j)];
        out.insert(std::move(s));
    }
    return {out.begin(), out.end()};
}

// interiority via 2r axis-direction LPs: x is interior iff it can be moved
// a positive distance along every +-e_j while staying in the hull
bool interior_by_lp(const LatticeVector& x, const std::vector<LatticeVector>& pts, int r) {
    size_t np = pts.size();
    for (int dir = 0; dir < 2 * r; ++dir) {
        int axis = dir / 2;
        long long sg = (dir % 2 == 0) ? 1 : -1;
        // maximize delta s.t. sum lam_p * p - delta * sg * e_axis = x, sum lam = 1
        RatMat A(size_t(r + 1), std::vector<Rational>(np + 1, Rational(0)));
        std::vector<Rational> b(size_t(r + 1));
        for (int k = 0; k < r; ++k) {
            for (size_t p = 0; p < np; ++p) A[size_t(k)][p] = rat(pts[p][size_t(k)]);
            A[size_t(k)][np] = k == axis ? rat(-sg) : Rational(0);
            b[size_t(k)] = rat(x[size_t(k)]);
        }
        for (size_t p = 0; p < np; ++p) A[size_t(r)][p] = 1;
        b[size_t(r)] = 1;
        std::vector<Rational> c(np + 1, Rational(0));
        c[np] = 1;
        LPResult res = simplex_solve(A, b, c);
        if (res.status == LPStatus::Infeasible) return false;
        if (res.status != LPStatus::Optimal) throw Error("unbounded interiority LP");
        if (res.value <= 0) return false;
    }
    return true;
}

std::vector<LatticeVector> box_candidates(const std::vector<LatticeVector>& pts, int r) {
    std::vector<long long> lo(size_t(r), 0), hi(size_t(r), 0);
    for (int k = 0; k < r; ++k) {
        lo[size_t(k)] = hi[size_t(k)] = pts[0][size_t(k)];
        for (const auto& p : pts) {
            lo[size_t(k)] = std::min(lo[size_t(k)], p[size_t(k)]);
            hi[size_t(k)] = std::max(hi[size_t(k)], p[size_t(k)]);
        }
    }
    // candidates are the lattice points strictly inside the bounding box
    std::vector<LatticeVector> out;
    for (int k = 0; k < r; ++k) {
        ++lo[size_t(k)];
        --hi[size_t(k)];
        if (lo[size_t(k)] > hi[size_t(k)]) return out;
    }
    LatticeVector x = lo;
    while (true) {
        out.push_back(x);
        int k = 0;
        for (; k < r; ++k) {
            if (++x[size_t(k)] <= hi[size_t(k)]) break;
            x[size_t(k)] = lo[size_t(k)];
        }
        if (k == r) break;
    }
    return out;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

ConeRational cone_rational(const DegreeFunction& deg, const Cone& cone,
                           const LatticeVector& m) {
    ConeRational out;
    out.cone = cone;
    out.m = m;
    out.l = deg.level();
    if (cone.rays.empty()) {
        out.numerator.push_back({0, 0});
        return out;
    }
    ParallelepipedData pp = parallelepiped(deg.fan(), cone);
    for (const auto& p : pp.points)
        out.numerator.push_back({norm_residue(deg.scaled(p), out.l), dot(m, p)});
    for (int i : cone.rays)
        out.denominator.push_back({norm_residue(deg.value(i), out.l), dot(m, deg.fan().ray(i))});
    return out;
}

QSeries ConeRational::expand(long prec) const {
    RawExpansion raw = expand_raw(l, numerator, denominator, prec);
    auto zeta = zeta_powers(l);
    long long base = std::min(raw.base, (long long)0);
    std::vector<Cyclotomic> coeffs(size_t(prec - base + 1), Cyclotomic::zero(unsigned(l)));
    for (size_t i = 0; i < raw.rows.size(); ++i)
        coeffs[size_t(raw.base - base) + i] = row_to_cyc(raw.rows[i], zeta) * raw.scalar;
    return QSeries(unsigned(l), base, prec, std::move(coeffs));
}

QSeries r_of_m(const DegreeFunction& deg, const LatticeVector& m, long prec) {
    LatticePipeline pipe(deg);
    QSeries out = pipe.r_of_m(m, prec);
    if (out.order() < 0) throw NegativeValuation();
    return out;
}

TruncationBound::TruncationBound(const Fan& fan)
    : rank_(fan.rank()), rays_(fan.rays()) {
    std::vector<LatticeVector> pts = subset_sums(rays_, rank_);
    for (const auto& x : box_candidates(pts, rank_))
        if (interior_by_lp(x, pts, rank_)) interior_.push_back(x);
    std::sort(interior_.begin(), interior_.end());
    if (interior_.empty()) throw Error("subset-sum hull has no interior lattice point");

    size_t k = rays_.size();
    for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
        std::vector<int> signs(k);
        std::vector<LatticeVector> rows(k);
        for (size_t i = 0; i < k; ++i) {
            signs[i] = (mask & (size_t(1) << i)) ? -1 : 1;
            rows[i] = rays_[i];
            if (signs[i] < 0)
                for (auto& v : rows[i]) v = -v;
        }
        std::set<LatticeVector> found;
        // all (rank-1)-subsets of the constraint rows
        auto try_dirs = [&](const std::vector<LatticeVector>& sub) {
            auto u = primitive_nullvector(sub, rank_);
            if (!u) return;
            for (int s : {1, -1}) {
                LatticeVector v = *u;
                if (s < 0)
                    for (auto& e : v) e = -e;
                bool ok = true;
                for (size_t i = 0; i < k && ok; ++i)
                    if (dot(v, rows[i]) < 0) ok = false;
                if (ok) found.insert(v);
            }
        };
        if (rank_ == 1) {
            try_dirs({});
        } else {
            std::vector<size_t> idx(size_t(rank_ - 1), 0);
            // subsets via combination odometer
            for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            if (k >= idx.size()) {
                while (true) {
                    std::vector<LatticeVector> sub;
                    for (size_t i : idx) sub.push_back(rows[i]);
                    try_dirs(sub);
                    size_t pos = idx.size();
                    while (pos > 0 && idx[pos - 1] == k - (idx.size() - pos) - 1) --pos;
                    if (pos == 0) break;
                    ++idx[pos - 1];
                    for (size_t j = pos; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
                }
            }
        }
        if (found.empty()) continue;
        SignRegion reg;
        reg.signs = signs;
        for (const auto& u : found) {
            long long L = bound(u);
            if (L <= 0) throw Error("truncation bound not positive on a region ray");
            reg.extreme_rays.push_back(u);
            reg.bound_values.push_back(L);
        }
        regions_.push_back(std::move(reg));
    }
}

long long TruncationBound::bound(const LatticeVector& m) const {
    long long best = dot(m, interior_[0]);
    for (const auto& n : interior_) best = std::min(best, dot(m, n));
    for (const auto& d : rays_) {
        long long e = dot(m, d);
        if (e < 0) best -= e;
    }
    return best;
}

long long TruncationBound::radius(long prec) const {
    long long rad = 0;
    for (const auto& reg : regions_) {
        long long s = 0;
        for (size_t j = 0; j < reg.extreme_rays.size(); ++j) {
            long long norm = 0;
            for (long long v : reg.extreme_rays[j]) norm = std::max(norm, std::llabs(v));
            s += ceil_div((long long)prec * norm, reg.bound_values[j]);
        }
        rad = std::max(rad, s);
    }
    return rad;
}

std::vector<LatticeVector> TruncationBound::enumerate(long prec) const {
    long long rad = radius(prec);
    std::vector<LatticeVector> out;
    LatticeVector m(size_t(rank_), -rad);
    while (true) {
        if (bound(m) <= prec) out.push_back(m);
        int k = 0;
        for (; k < rank_; ++k) {
            if (++m[size_t(k)] <= rad) break;
            m[size_t(k)] = -rad;
        }
        if (k == rank_) break;
    }
    return out;
}

Json TruncationBound::certificate(long prec) const {
    Json regions = Json::array();
    for (const auto& reg : regions_) {
        Json rays = Json::array(), bounds = Json::array();
        for (const auto& u : reg.extreme_rays) rays.push_back(u);
        for (long long b : reg.bound_values) bounds.push_back(b);
        regions.push_back(Json{{"signs", reg.signs},
                               {"extreme_rays", rays},
                               {"bounds", bounds}});
    }
    Json in_pts = Json::array();
    for (const auto& n : interior_) in_pts.push_back(n);
    Json fan_rays = Json::array();
    for (const auto& d : rays_) fan_rays.push_back(d);
    return Json{{"prec", prec},
                {"rank", rank_},
                {"rays", fan_rays},
                {"interior_points", in_pts},
                {"radius", radius(prec)},
                {"regions", regions},
                {"m_count", enumerate(prec).size()}};
}

namespace {

// checker-side interiority: supporting hyperplanes from r-point subsets,
// normals by cross products (rank <= 3)
std::vector<LatticeVector> interior_points_by_facets(const std::vector<LatticeVector>& pts,
                                                     int r) {
    {
        RatMat diffs;
        for (size_t i = 1; i < pts.size(); ++i) {
            std::vector<Rational> row;
            for (int k = 0; k < r; ++k) row.push_back(rat(pts[i][size_t(k)] - pts[0][size_t(k)]));
            diffs.push_back(std::move(row));
        }
        if (rat_rank(diffs) < size_t(r)) return {};
    }
    std::vector<std::pair<LatticeVector, long long>> supports;
    size_t n = pts.size();
    auto consider = [&](LatticeVector w, const LatticeVector& p0) {
        if (is_zero_vector(w)) return;
        w = primitive(std::move(w));
        long long beta = dot(w, p0);
        bool below = true, above = true;
        for (const auto& p : pts) {
            long long v = dot(w, p);
            if (v > beta) below = false;
            if (v < beta) above = false;
        }
        if (!below && !above) return;
        if (!below) {
            for (auto& v : w) v = -v;
            beta = -beta;
        }
        supports.push_back({std::move(w), beta});
    };
    if (r == 1) {
        for (const auto& p : pts) consider({1}, p);
    } else if (r == 2) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                LatticeVector d{pts[j][0] - pts[i][0], pts[j][1] - pts[i][1]};
                consider({-d[1], d[0]}, pts[i]);
            }
    } else if (r == 3) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                for (size_t k = j + 1; k < n; ++k) {
                    LatticeVector a{pts[j][0] - pts[i][0], pts[j][1] - pts[i][1],
                                    pts[j][2] - pts[i][2]};
                    LatticeVector b{pts[k][0] - pts[i][0], pts[k][1] - pts[i][1],
                                    pts[k][2] - pts[i][2]};
                    consider({a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                              a[0] * b[1] - a[1] * b[0]},
                             pts[i]);
                }
    } else {
        throw Error("certificate checker supports rank <= 3");
    }
    std::vector<LatticeVector> out;
    for (const auto& x : box_candidates(pts, r)) {
        bool inside = true;
        for (const auto& [w, beta] : supports)
            if (dot(w, x) >= beta) inside = false;
        if (inside) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long direct_bound(const LatticeVector& m, const std::vector<LatticeVector>& interior,
                       const std::vector<LatticeVector>& rays) {
    long long best = dot(m, interior[0]);
    for (const auto& n : interior) best = std::min(best, dot(m, n));
    for (const auto& d : rays) {
        long long e = dot(m, d);
        if (e < 0) best -= e;
    }
    return best;
}

}  // namespace

bool check_truncation_certificate(const Fan& fan, const Json& cert, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    try {
        int r = fan.rank();
        long prec = cert.at("prec").get<long>();
        if (cert.at("rank").get<int>() != r) return fail("rank mismatch");
        std::vector<LatticeVector> cert_rays;
        for (const auto& j : cert.at("rays")) cert_rays.push_back(j.get<LatticeVector>());
        if (cert_rays != fan.rays()) return fail("ray table mismatch");

        std::vector<LatticeVector> pts = subset_sums(fan.rays(), r);
        std::vector<LatticeVector> interior = interior_points_by_facets(pts, r);
        std::vector<LatticeVector> cert_interior;
        for (const auto& j : cert.at("interior_points"))
            cert_interior.push_back(j.get<LatticeVector>());
        std::sort(cert_interior.begin(), cert_interior.end());
        if (cert_interior != interior) return fail("interior point set mismatch");
        if (interior.empty()) return fail("empty interior point set");

        size_t k = fan.rays().size();
        // recompute extreme rays per sign region through cross products
        std::map<std::vector<int>, std::set<LatticeVector>> regions;
        for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
            std::vector<int> signs(k);
            std::vector<LatticeVector> rows(k);
            for (size_t i = 0; i < k; ++i) {
                signs[i] = (mask & (size_t(1) << i)) ? -1 : 1;
                rows[i] = fan.ray(int(i));
                if (signs[i] < 0)
                    for (auto& v : rows[i]) v = -v;
            }
            std::set<LatticeVector> found;
            auto keep = [&](LatticeVector u) {
                if (is_zero_vector(u)) return;
                u = primitive(std::move(u));
                for (int s : {1, -1}) {
                    LatticeVector v = u;
                    if (s < 0)
                        for (auto& e : v) e = -e;
                    bool ok = true;
                    for (size_t i = 0; i < k && ok; ++i)
                        if (dot(v, rows[i]) < 0) ok = false;
                    if (ok) found.insert(v);
                }
            };
            if (r == 1) {
                keep({1});
            } else if (r == 2) {
                for (size_t i = 0; i < k; ++i) keep({-rows[i][1], rows[i][0]});
            } else if (r == 3) {
                for (size_t i = 0; i < k; ++i)
                    for (size_t j = i + 1; j < k; ++j) {
                        const auto& a = rows[i];
                        const auto& b = rows[j];
                        keep({a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                              a[0] * b[1] - a[1] * b[0]});
                    }
            } else {
                return fail("certificate checker supports rank <= 3");
            }
            if (!found.empty()) regions[signs] = std::move(found);
        }
        std::map<std::vector<int>, std::set<LatticeVector>> cert_regions;
        long long computed_radius = 0;
        for (const auto& jr : cert.at("regions")) {
            std::vector<int> signs = jr.at("signs").get<std::vector<int>>();
            std::set<LatticeVector> rays;
            std::vector<LatticeVector> ray_list;
            std::vector<long long> bounds = jr.at("bounds").get<std::vector<long long>>();
            for (const auto& u : jr.at("extreme_rays")) ray_list.push_back(u.get<LatticeVector>());
            if (ray_list.size() != bounds.size()) return fail("bounds/rays length mismatch");
            long long term = 0;
            for (size_t i = 0; i < ray_list.size(); ++i) {
                long long L = direct_bound(ray_list[i], interior, fan.rays());
                if (L != bounds[i]) return fail("stated bound does not match recomputation");
                if (L <= 0) return fail("nonpositive bound on extreme ray");
                long long norm = 0;
                for (long long v : ray_list[i]) norm = std::max(norm, std::llabs(v));
                term += ceil_div(prec * norm, L);
                rays.insert(ray_list[i]);
            }
            computed_radius = std::max(computed_radius, term);
            cert_regions[signs] = std::move(rays);
        }
        if (cert_regions != regions) return fail("sign region decomposition mismatch");

        long long radius = cert.at("radius").get<long long>();
        if (radius < computed_radius) return fail("radius smaller than recomputed value");

        // direct re-enumeration inside the certified radius
        size_t count = 0;
        LatticeVector m(size_t(r), -radius);
        while (true) {
            if (direct_bound(m, interior, fan.rays()) <= prec) ++count;
            int kk = 0;
            for (; kk < r; ++kk) {
                if (++m[size_t(kk)] <= radius) break;
                m[size_t(kk)] = -radius;
            }
            if (kk == r) break;
        }
        if (count != cert.at("m_count").get<size_t>()) return fail("m count mismatch");

        // falsification layer: the bound must already exceed prec on the
        // first shell outside the radius
        if (r <= 2 || radius <= 40) {
            LatticeVector s(size_t(r), -(radius + 1));
            while (true) {
                long long norm = 0;
                for (long long v : s) norm = std::max(norm, std::llabs(v));
                if (norm == radius + 1 &&
                    direct_bound(s, interior, fan.rays()) <= prec)
                    return fail("bound fails on the boundary shell");
                int kk = 0;
                for (; kk < r; ++kk) {
                    if (++s[size_t(kk)] <= radius + 1) break;
                    s[size_t(kk)] = -(radius + 1);
                }
                if (kk == r) break;
            }
        }
    } catch (const std::exception& e) {
        return fail(std::string("malformed certificate: ") + e.what());
    }
    if (why) why->clear();
    return true;
}

QSeries toric_form_lattice_sum(const DegreeFunction& deg, long prec, Json* certificate) {
    if (!deg.fan().is_complete()) throw Error("fan must be complete");
    std::optional<DegreeFunction> tri;
    const DegreeFunction* work = &deg;
    if (!deg.fan().is_simplicial()) {
        tri.emplace(deg.fan().triangulate(), deg.level(), deg.values());
        work = &*tri;
    }
    LatticePipeline pipe(*work);
    TruncationBound tb(work->fan());
    long l = deg.level();
    std::vector<std::vector<long long>> counts(size_t(prec + 1),
                                               std::vector<long long>(size_t(l), 0));
    std::vector<Cyclotomic> extra(size_t(prec + 1), Cyclotomic::zero(unsigned(l)));
    for (const auto& m : tb.enumerate(prec)) pipe.accumulate(m, prec, counts, extra);
    std::vector<Cyclotomic> coeffs;
    for (long n = 0; n <= prec; ++n)
        coeffs.push_back(row_to_cyc(counts[size_t(n)], pipe.zeta) + extra[size_t(n)]);
    if (certificate) *certificate = tb.certificate(prec);
    return QSeries(unsigned(l), 0, prec, std::move(coeffs));
}

QSeries toric_form_cohomological(const DegreeFunction& deg, long prec) {
    const Fan& fan = deg.fan();
    IntersectionRing ring(fan);  // rejects non-smooth or non-complete fans
    int r = fan.rank();
    long l = deg.level();
    size_t nrays = fan.rays().size();

    using Mono = std::vector<int>;
    auto total_deg = [](const Mono& m) {
        int t = 0;
        for (int e : m) t += e;
        return t;
    };
    QSeries zero(unsigned(l), prec);
    std::map<Mono, QSeries> poly;
    poly.insert({Mono(nrays, 0), QSeries::constant(Cyclotomic::one(unsigned(l)), prec)});

    for (size_t i = 0; i < nrays; ++i) {
        long a = norm_residue(deg.value(int(i)), l);
        // inner = sum_{k=1}^{r} ((-1)^k / k!) s^{(k)}_{a/l} D^k
        std::vector<QSeries> inner(size_t(r + 1), zero);
        Integer kfact = 1;
        for (int k = 1; k <= r; ++k) {
            kfact *= k;
            inner[size_t(k)] =
                s_series(a, l, k, prec) * Rational(Integer(k % 2 == 0 ? 1 : -1), kfact);
        }
        // E = exp(inner) modulo D^{r+1}
        std::vector<QSeries> E(size_t(r + 1), zero);
        E[0] = QSeries::constant(Cyclotomic::one(unsigned(l)), prec);
        std::vector<QSeries> pw = E;  // inner^t
        Integer tfact = 1;
        for (int t = 1; t <= r; ++t) {
            std::vector<QSeries> next(size_t(r + 1), zero);
            for (int p = 0; p <= r; ++p)
                for (int q = 1; p + q <= r; ++q) next[size_t(p + q)] += pw[size_t(p)] * inner[size_t(q)];
            pw = std::move(next);
            tfact *= t;
            for (int p = 0; p <= r; ++p)
                E[size_t(p)] += pw[size_t(p)] * Rational(Integer(1), tfact);
        }
        std::map<Mono, QSeries> next;
        for (const auto& [mono, c] : poly) {
            int room = r - total_deg(mono);
            for (int j = 0; j <= room; ++j) {
                Mono m2 = mono;
                m2[i] += j;
                QSeries term = c * E[size_t(j)];
                auto it = next.find(m2);
                if (it == next.end())
                    next.insert({std::move(m2), std::move(term)});
                else
                    it->second += term;
            }
        }
        poly = std::move(next);
    }

    QSeries out = zero;
    for (const auto& [mono, c] : poly) {
        if (total_deg(mono) != r) continue;
        Rational w = ring.integrate_monomial(mono);
        if (w != 0) out += c * w;
    }
    return out;
}

GeneratorPoly express_in_generators(const QSeries& f, int weight, long l) {
    if (l < 5) throw SmallLevel();
    if (weight < 1) throw Error("weight must be positive");
    long B = sturm_bound(l, weight);
    if (f.precision() < B) throw InsufficientPrecision();
    QSeries g = f.level() == unsigned(l) ? f : f.embed(unsigned(l));

    GeneratorPoly out;
    out.l = l;
    out.weight = weight;
    if (g.is_zero_to_precision()) return out;

    // weight-w monomials in the s^{(1)}_{b/l}, b = 1..l-1, as multisets
    std::vector<GeneratorMonomial> monomials;
    std::vector<QSeries> series;
    std::vector<QSeries> gens;
    for (long b = 1; b < l; ++b) gens.push_back(s_series(b, l, 1, B));
    GeneratorMonomial cur;
    auto rec = [&](auto&& self, long min_b, int left, const QSeries& partial) -> void {
        if (left == 0) {
            monomials.push_back(cur);
            series.push_back(partial);
            return;
        }
        for (long b = min_b; b < l; ++b) {
            cur.push_back(GeneratorSymbol::s(b, l, 1));
            self(self, b, left - 1, partial * gens[size_t(b - 1)]);
            cur.pop_back();
        }
    };
    rec(rec, 1, weight, QSeries::constant(Cyclotomic::one(unsigned(l)), B));

    std::vector<std::vector<Cyclotomic>> A;
    std::vector<Cyclotomic> rhs;
    for (long d = 0; d <= B; ++d) {
        std::vector<Cyclotomic> row;
        for (const auto& s : series) row.push_back(s.coefficient(d));
        A.push_back(std::move(row));
        rhs.push_back(g.coefficient(d));
    }
    auto sol = cyc_solve_any(std::move(A), std::move(rhs));
    if (!sol) throw NotInRing();
    for (size_t j = 0; j < monomials.size(); ++j)
        if (!(*sol)[j].is_zero()) out.add_term(monomials[j], (*sol)[j]);
    return out;
}

}  // namespace torimod
