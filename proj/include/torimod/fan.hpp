#ifndef TORIMOD_FAN_HPP
#define TORIMOD_FAN_HPP

#include <optional>
#include <vector>

#include "torimod/lattice.hpp"

namespace torimod {

// A cone is stored as the sorted list of indices of its extreme rays in the
// ambient fan's ray table.
struct Cone {
    std::vector<int> rays;
    int dim = 0;

    bool operator==(const Cone& o) const { return rays == o.rays; }
};

class Fan {
public:
    // Validates on construction: rays primitive, distinct and all used; every
    // cone pointed with the listed rays extreme; the face closure has pairwise
    // disjoint relative interiors. Throws InvalidFan.
    Fan(int rank, std::vector<LatticeVector> rays, std::vector<std::vector<int>> max_cones);

    int rank() const { return rank_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const LatticeVector& ray(int i) const { return rays_[i]; }
    // All cones of the fan, faces and zero cone included.
    const std::vector<Cone>& cones() const { return cones_; }
    const std::vector<Cone>& max_cones() const { return max_cones_; }
    int codim(const Cone& c) const { return rank_ - c.dim; }

    bool is_complete() const;  // throws NotPure on mixed-dimension maximal cones
    bool is_simplicial() const;
    bool is_smooth() const;

    Fan triangulate() const;

    // Ray matrix of a cone, columns = rays (rank x |rays|).
    RatMat ray_matrix(const Cone& c) const;
    // Coordinates of n in the ray basis of a simplicial cone; nullopt when n
    // is outside the linear span.
    std::optional<std::vector<Rational>> cone_coordinates(const Cone& c,
                                                          const LatticeVector& n) const;
    // Index into max_cones() of some maximal cone containing n; nullopt if
    // none does (never for a complete fan).
    std::optional<size_t> containing_max_cone(const LatticeVector& n) const;
    // Is n in the cone (nonnegative combination of its rays)?
    bool cone_contains(const Cone& c, const LatticeVector& n) const;

private:
    int rank_;
    std::vector<LatticeVector> rays_;
    std::vector<Cone> cones_;
    std::vector<Cone> max_cones_;
    mutable std::optional<bool> complete_;

    void validate_and_build(const std::vector<std::vector<int>>& max_cones);
};

struct ParallelepipedData {
    std::vector<int> ray_indices;        // cone rays, as fan indices
    std::vector<LatticeVector> points;   // half-open parallelepiped, 0 first
    Integer index;
};

// Lattice points of {sum lambda_i d_i : 0 <= lambda_i < 1}. Throws
// NotSimplicial when the listed rays are linearly dependent.
ParallelepipedData parallelepiped(const std::vector<LatticeVector>& cone_rays);
ParallelepipedData parallelepiped(const Fan& fan, const Cone& c);

// All lattices S with N in S in (1/p)N and [S:N] = p^(r-1); each entry is a
// basis, one vector per row, with entries in (1/p)Z.
std::vector<RatMat> superlattices(int r, long p);

}  // namespace torimod

#endif
