#pragma once
#include <optional>
#include <vector>

#include "ccnet/rational.hpp"

namespace ccnet {

// Dense exact matrix, row major.
struct RationalMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const RationalMatrix&) const = default;
};

RationalMatrix identity_matrix(int n);
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mat_add(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mat_sub(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mat_scale(const RationalMatrix& a, const Rat& c);
bool mat_is_zero(const RationalMatrix& a);
std::vector<Rat> mat_apply(const RationalMatrix& a, const std::vector<Rat>& x);

// Reduced row echelon form with leftmost pivots, scanned top to bottom.
// Returns the pivot columns in order; the matrix is modified in place.
std::vector<int> rref_inplace(RationalMatrix& m);

int rank(RationalMatrix m);

// Canonical basis of the null space of m (as vectors of length cols), row
// reduced again so the result is the unique RREF basis of the subspace.
std::vector<std::vector<Rat>> kernel_basis(const RationalMatrix& m);

// Row-reduces the given spanning vectors; returns the unique echelon basis of
// their span together with its pivot columns.
struct EchelonSubspace {
    std::vector<std::vector<Rat>> basis;
    std::vector<int> pivots;

    int dim() const { return static_cast<int>(basis.size()); }
    // Canonical representative of v modulo the subspace: pivot coordinates
    // eliminated against the echelon basis.
    std::vector<Rat> reduce(const std::vector<Rat>& v) const;
    bool contains(const std::vector<Rat>& v) const;
};

EchelonSubspace echelon_span(const std::vector<std::vector<Rat>>& vectors, int dim);

// One solution of A x = b, or nullopt when inconsistent.
std::optional<std::vector<Rat>> solve(const RationalMatrix& A, const std::vector<Rat>& b);

// --- univariate polynomials over the rationals (ascending coefficients) --

using UPoly = std::vector<Rat>;  // p[i] multiplies x^i; no trailing zeros

UPoly upoly_trim(UPoly p);
int upoly_deg(const UPoly& p);   // -1 for the zero polynomial
UPoly upoly_add(const UPoly& a, const UPoly& b);
UPoly upoly_sub(const UPoly& a, const UPoly& b);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
UPoly upoly_rem(UPoly a, const UPoly& b);
UPoly upoly_divexact(const UPoly& a, const UPoly& b);
UPoly upoly_gcd(UPoly a, UPoly b);          // monic
UPoly upoly_deriv(const UPoly& p);
UPoly upoly_monic(UPoly p);
Rat upoly_eval(const UPoly& p, const Rat& x);
RationalMatrix upoly_eval_matrix(const UPoly& p, const RationalMatrix& m);

// Least-degree monic p with p(M) = 0.
UPoly minimal_polynomial(const RationalMatrix& m);

// Square-free part: p / gcd(p, p').
UPoly square_free_part(const UPoly& p);

bool is_nilpotent(const RationalMatrix& m);

// Jordan-Chevalley decomposition over the rationals: M = S + N with S
// semisimple (square-free minimal polynomial), N nilpotent, S N = N S, and
// S = witness(M) for a polynomial witness with witness(0) = 0. Computed by
// Newton iteration on the square-free part of the minimal polynomial in
// Q[x]/(minpoly); the iteration must finish within ceil(log2(deg minpoly)) + 1
// rounds or an internal error is raised.
struct JordanChevalley {
    RationalMatrix semisimple;
    RationalMatrix nilpotent;
    UPoly witness;
};

JordanChevalley jordan_chevalley(const RationalMatrix& m);

} // namespace ccnet
