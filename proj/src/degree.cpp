#include "torimod/degree.hpp"

#include "torimod/errors.hpp"

namespace torimod {

DegreeFunction::DegreeFunction(Fan fan, long l, std::vector<long long> values)
    : fan_(std::move(fan)), l_(l), values_(std::move(values)) {
    if (l_ < 1) throw Error("degree function needs a positive denominator");
    if (values_.size() != fan_.rays().size())
        throw Error("degree function needs one value per ray");
    for (long long a : values_)
        if (a % l_ == 0) throw IntegralDegreeError();

    // on non-simplicial cones the ray values must come from a single linear
    // functional; rank([A^T]) must match rank([A^T | a])
    for (const auto& c : fan_.max_cones()) {
        if (static_cast<int>(c.rays.size()) == c.dim) continue;
        RatMat rows, rows_aug;
        for (int i : c.rays) {
            std::vector<Rational> row;
            for (long long x : fan_.ray(i)) row.push_back(rat(x));
            rows.push_back(row);
            row.push_back(rat(values_[i]));
            rows_aug.push_back(std::move(row));
        }
        if (rat_rank(rows) != rat_rank(rows_aug))
            throw InvalidFan("degree values are not linear on a non-simplicial cone");
    }
}

Rational DegreeFunction::operator()(const LatticeVector& n) const {
    auto mc = fan_.containing_max_cone(n);
    if (!mc) throw Error("degree evaluation outside the fan support");
    const Cone& c = fan_.max_cones()[*mc];
    if (static_cast<int>(c.rays.size()) == c.dim) {
        auto lam = fan_.cone_coordinates(c, n);
        Rational acc(0);
        for (size_t t = 0; t < c.rays.size(); ++t)
            acc += (*lam)[t] * rat(values_[c.rays[t]], l_);
        acc.canonicalize();
        return acc;
    }
    // non-simplicial: find one linear functional phi with phi . d_i = a_i / l
    // (the system is consistent by construction) and evaluate phi . n.
    // Restrict phi to an independent column subset, zero elsewhere.
    RatMat rows;
    std::vector<Rational> rhs;
    for (int i : c.rays) {
        std::vector<Rational> row;
        for (long long x : fan_.ray(i)) row.push_back(rat(x));
        rows.push_back(std::move(row));
        rhs.push_back(rat(values_[i], l_));
    }
    std::vector<size_t> cols;
    RatMat sub;
    for (int j = 0; j < fan_.rank(); ++j) {
        RatMat cand = sub;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (cand.size() <= i) cand.push_back({});
            cand[i].push_back(rows[i][j]);
        }
        if (rat_rank(cand) == cand[0].size()) {
            sub = std::move(cand);
            cols.push_back(j);
        }
    }
    auto phi = rat_solve_rect(sub, rhs);
    if (!phi) throw Error("degree values inconsistent on a cone");
    Rational acc(0);
    for (size_t t = 0; t < cols.size(); ++t) acc += (*phi)[t] * rat(n[cols[t]]);
    acc.canonicalize();
    return acc;
}

long long DegreeFunction::scaled(const LatticeVector& n) const {
    Rational v = (*this)(n)*Rational(l_);
    v.canonicalize();
    if (v.get_den() != 1) throw Error("degree value is not in (1/l)Z");
    return mpz_get_si(v.get_num_mpz_t());
}

}  // namespace torimod
