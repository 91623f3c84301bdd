#pragma once
#include <map>

#include "ccnet/liealg.hpp"
#include "ccnet/structure.hpp"

namespace ccnet {

// f0 = f0_S + f0_N with gamma_{f0_S} semisimple (square-free minimal
// polynomial), gamma_{f0_N} nilpotent, the two commuting, and
// [f0_S, f0_N]_Sigma = 0. witness is the polynomial p with p(gamma_{f0}) =
// gamma_{f0_S} and p(0) = 0, so f0_S is itself a polynomial in f0 under
// symbolic composition.
struct SnSplit {
    PolyMap f0, f0_S, f0_N;
    UPoly witness;
};

SnSplit sn_decompose(const NetworkSpec& spec, const PolyMap& f0);

// Choice of the normal-form complement per grade.
enum class Strategy {
    sn,     // complement of ad_{f0_N}(ker ad_{f0_S}) inside ker ad_{f0_S}
    image,  // coordinate complement of im ad_{f0}
};

Strategy strategy_from_name(const std::string& name);  // "sn" | "image"

// Working data of one grade: the quotient P^{k,l} / ker gamma (optionally
// restricted to a G-invariant subspace first) with the quotient action of
// ad_{f0} and the chosen normal space.
struct GradeSpace {
    int k = 0, l = 0;
    GradedBasis basis;                       // monomials of P^{k,l}
    EchelonSubspace working;                 // subspace actually used (full or invariant)
    EchelonSubspace kernel;                  // ker gamma inside it, working coordinates
    std::vector<int> rep;                    // working coordinates representing the quotient
    RationalMatrix ad_q;                     // ad_{f0} on the quotient
    std::vector<std::vector<Rat>> normal_q;  // N^{k,l} basis, quotient coordinates
    std::vector<PolyMap> normal_space;       // the same vectors as polynomial maps

    int quotient_dim() const { return static_cast<int>(rep.size()); }
    // Quotient coordinates of a polynomial of this grade.
    std::vector<Rat> project(const PolyMap& h) const;
    // Canonical polynomial representative of quotient coordinates.
    PolyMap lift(const std::vector<Rat>& q) const;
};

GradeSpace grade_space(const NetworkSpec& spec, const SnSplit& split, int k, int l,
                       Strategy strategy,
                       const std::vector<InputSymmetry>* invariant_group = nullptr,
                       bool use_quotient = true);

// Solves ad_{f0}(g) + residual == h modulo ker gamma with residual in N^{k,l}
// and g carrying no component along ker ad_{f0} (the minimal solution).
struct HomologicalSolution {
    PolyMap generator;
    PolyMap residual;
};

HomologicalSolution homological_solve(const NetworkSpec& spec, const PolyMap& f0, int k,
                                      int l, const PolyMap& h, Strategy strategy);

struct NormalFormOptions {
    int r1 = 1;                // highest state grade to normalize
    int r2 = 0;                // highest parameter grade
    Strategy strategy = Strategy::sn;
    bool use_quotient = true;  // false: insist ker gamma vanishes at every grade
    const std::vector<InputSymmetry>* invariant_group = nullptr;
};

struct GeneratorRecord {
    int k = 0, l = 0;
    PolyMap g;
};

struct NormalFormResult {
    PolyMap fbar;                        // truncated to the requested grades
    SnSplit split;                       // of the linearization
    std::vector<GeneratorRecord> generators;
    std::vector<GradeSpace> grades;      // one per normalized grade, in order
};

// Lie-series normal form: grade by grade in the order (1,0) ... (r1,0),
// (-1,1), (0,1) ... (r1,1), ..., (-1,r2) ... (r1,r2), each step transforming
// f by exp(ad_g). Normalized grades are final: later steps cannot disturb
// them.
NormalFormResult normal_form(const NetworkSpec& spec, const PolyMap& f,
                             const NormalFormOptions& opt);

// Checks [f0_S, fbar_{k,l}]_Sigma == 0 modulo ker gamma at every grade up to
// the truncation; with the SN strategy this is the normal-form symmetry
// gamma_{f0_S} of the truncated vector field.
bool normal_form_symmetry_check(const NetworkSpec& spec, const SnSplit& split,
                                const PolyMap& fbar, int r1, int r2);

// exp(ad_g) applied to f, both truncated to the given grades; the series is
// finite on every truncation.
PolyMap lie_series_apply(const NetworkSpec& spec, const PolyMap& g, int gk, int gl,
                         const PolyMap& f, int r1, int r2);

} // namespace ccnet
