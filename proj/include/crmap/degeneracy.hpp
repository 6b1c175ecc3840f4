#pragma once

#include <string>
#include <vector>

#include "crmap/hypersurface.hpp"
#include "crmap/linalg.hpp"

namespace crmap {

/// k-fold application of the complexified CR field L = d/dchi - 2 i z d/dtau
PolyS L_apply(const PolyS& a, int times = 1);

struct DegeneracyReport {
    std::string point;        // printable point
    std::vector<int> ranks;   // dim E_k for k = 0, 1, ...
    int s = 0;                // N - max rank
    int k0 = 0;               // first k attaining the max rank
    bool exact_mode = true;
    double min_kept_rel = 0.0;     // float mode: singular-value gap data of the final matrix
    double max_dropped_rel = 0.0;  // float mode
};

/// spanning vectors of E_k(p) as matrix rows: v_0 = (conj f(p̄), i/2), v_m = (L^m conj f, 0)
MatS Ek_matrix(const CRMapS& H, const Scalar& z0, const Scalar& w0, int k);
int Ek_rank(const CRMapS& H, const Scalar& z0, const Scalar& w0, int k);

DegeneracyReport degeneracy_at(const CRMapS& H, const Scalar& z0, const Scalar& w0);
DegeneracyReport degeneracy_at_float(const CRMapC& H, FloatComplex z0, FloatComplex w0,
                                     double rank_tol = 1e-8, double membership_tol = 1e-9);

struct TangentialReport {
    std::vector<int> generic_ranks;  // prefix ranks of the parametrized matrix
    int k = 0;                       // stabilization order of the generic rank
    int tdeg = 0;                    // N - 1 - generic rank
    int certified_rank = 0;
};

/// Tangential degeneracy at q: parametrizes the Segre variety S_q by z, forms the
/// matrix of L^k conj-f entries as polynomials in the parameter, and certifies its
/// generic rank (random rational evaluation + identical vanishing of all larger minors).
TangentialReport tangential_degeneracy(const CRMapS& H, const Scalar& z0, const Scalar& w0,
                                       uint64_t seed = 0);

struct LocusEntry {
    std::string point;
    int s = -1;
    int k0 = -1;
    bool pole = false;
};

struct LocusReport {
    std::vector<LocusEntry> entries;
    int generic_s = -1;                  // minimal s among sampled points
    std::vector<size_t> exceptional;     // indices with s > generic_s
};

LocusReport degeneracy_locus_sample(const CRMapS& H,
                                    const std::vector<std::pair<Scalar, Scalar>>& points);

/// dimension of the complex-linear span of the image through 0: the exact rank of
/// the coefficient matrix of the cleared numerators
int image_dimension(const CRMapS& H);

/// seeded random rational H^3 point; numerators/denominators bounded by 97,
/// rejection-sampled away from denominator zeros of H
std::pair<Scalar, Scalar> random_h3_point(const CRMapS& H, std::mt19937_64& rng);

}  // namespace crmap
