#pragma once

#include <string>
#include <vector>

#include "crmap/hypersurface.hpp"

namespace crmap {

struct FamilyIParams {
    Rational mu;
    Scalar lambda;
    int N = 4;
    // derived on validation
    Scalar a3, b3, b4;
};

struct FamilyIIParams {
    Rational a;
    Scalar lambda;
    int N = 4;
    Scalar a3;
};

/// validated parameters with the derived coefficients filled in; throws
/// ConstraintViolation naming the violated constraint and the offending value
FamilyIParams validate_family_i(const Rational& mu, const Scalar& lambda, int N);
FamilyIIParams validate_family_ii(const Rational& a, const Scalar& lambda, int N);

/// the cubic family of degenerate maps with a quadratic factor z^2 on the second slot
CRMapS family_thm_i(const Rational& mu, const Scalar& lambda, int N);
/// the companion family with quadratic factor z^2 + a w^2
CRMapS family_thm_ii(const Rational& a, const Scalar& lambda, int N);

/// named catalog constructors; N-parametrized entries take the target dimension
CRMapS catalog_h14();
CRMapS catalog_h24();
CRMapS catalog_h1n(int N = 5);
CRMapS catalog_h2n(int N = 5);
CRMapS catalog_f14();
CRMapS catalog_f24();
CRMapS catalog_f1n(int N = 5);
CRMapS catalog_f2n(int N = 5);
CRMapS catalog_whitney();
CRMapS catalog_dangelo(const Rational& s);
CRMapS catalog_lebl(const Rational& s, const Rational& t, int m);
CRMapS catalog_faran(int which);  // 1 linear, 2 whitney, 3 (z^2, sqrt2 zw, w^2), 4 cubic
CRMapS catalog_linear(int N);     // Heisenberg linear embedding (z, 0, ..., 0, w)

struct CatalogEntry {
    std::string name;
    CRMapS map;
    bool verified = false;
};

/// every family in the catalog at its default exact parameters, each verified
/// against the mapping equation
std::vector<CatalogEntry> catalog();

/// inserts zero components just before the final slot so the map lands in C^N
CRMapS pad_to(const CRMapS& H, int N);

enum class FunctionalEq { E1, E2, E3 };

struct CaseIParams {
    Scalar lambda;
    Rational mu;
    Rational a{0};
    Scalar r;
    Scalar b;
};

struct FunctionalEquation {
    FunctionalEq which;
    PolyS A, B, C;  // the displayed coefficient polynomials
    bool verified = false;
};

/// Verifies the holomorphic functional equations on a Case-I-shaped map
/// (components 2..N-1 share the factor phi extracted from the second slot):
///   E1: w f - z g - (1/2) w^2 (lambda w + i z) phi = 0
///   E2: A1 f + B1 phi = C1   (requires a = 0)
///   E3: A2 f + B2 phi = C2   (requires a = 0, lambda != 0)
FunctionalEquation check_functional_equation(const CRMapS& H, FunctionalEq which,
                                             const CaseIParams& params);

enum class FactoredForm { CaseILinearFactor, CaseIIQuadraticFactor, Neither };

struct Lemma44Result {
    FactoredForm form = FactoredForm::Neither;
    Scalar phi0, phi10, phi01;  // leading jets of the extracted phi
};

/// detects, by exact divisibility of the cleared numerators, which factored
/// shape the components 2..N-1 take
Lemma44Result lemma44_factored_form(const CRMapS& H);

}  // namespace crmap
