#pragma once
#include <vector>

#include "ccnet/rational.hpp"

namespace ccnet {

// Exponent vector over all scalar variables of a signature: state variables
// in slot-major order, then parameters.
using Mono = std::vector<int>;

// Global monomial order: total degree ascending, ties broken lexicographically
// with earlier variables dominant and larger exponents first. Restricted to a
// fixed grade this is graded-lex with X1^a before X2^a and parameters last.
bool mono_less(const Mono& a, const Mono& b);

int mono_degree(const Mono& m);

struct Term {
    Mono mono;
    Rat coeff;

    bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
};

// Sorted by mono_less, strictly increasing, no zero coefficients.
using Poly = std::vector<Term>;

// Shape of one cell-dynamics function: a polynomial map
//   V_{d_1} x ... x V_{d_arity} x R^params -> R^out_dim
// where slot_dims lists the d_i. Homogeneous networks use arity n with all
// slots of dimension m and out_dim m.
struct Signature {
    std::vector<int> slot_dims;
    int out_dim = 1;
    int params = 0;

    int arity() const { return static_cast<int>(slot_dims.size()); }
    int state_vars() const;
    int total_vars() const { return state_vars() + params; }
    // Scalar index (0-based) of component d of slot j, both 1-based.
    int var(int slot, int comp) const;
    int param_var(int t) const { return state_vars() + t - 1; }  // t 1-based
    bool uniform() const;  // all slots share out_dim's dimension

    bool operator==(const Signature&) const = default;
};

Signature homogeneous_sig(int n, int m, int p);

struct PolyMap {
    Signature sig;
    std::vector<Poly> comp;  // size sig.out_dim

    bool is_zero() const;
    bool operator==(const PolyMap&) const = default;
};

PolyMap zero_map(const Signature& sig);

// --- scalar polynomial arithmetic ---------------------------------------

Poly poly_normalize(std::vector<Term> terms);       // sort, merge, drop zeros
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_scale(const Poly& a, const Rat& c);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, int e, int nvars);
Poly poly_const(const Rat& c, int nvars);
Poly poly_var(int v, int nvars);                    // v 0-based
Poly poly_partial(const Poly& a, int v);            // formal d/dx_v
Rat poly_eval(const Poly& a, const std::vector<Rat>& x);
// Substitutes args[v] for variable v; args are polynomials over a common
// target variable space of size target_vars.
Poly poly_subst(const Poly& a, const std::vector<Poly>& args, int target_vars);
int poly_state_degree(const Poly& a, int state_vars);   // max, -1 for zero poly

// --- polynomial maps -----------------------------------------------------

PolyMap pm_add(const PolyMap& a, const PolyMap& b);
PolyMap pm_sub(const PolyMap& a, const PolyMap& b);
PolyMap pm_scale(const PolyMap& a, const Rat& c);

// Formal derivative of every component by the scalar variable (slot, comp).
PolyMap pm_partial(const PolyMap& f, int slot, int comp);

// Exact evaluation; x concatenates the slot values, lambda the parameters.
std::vector<Rat> pm_eval(const PolyMap& f, const std::vector<Rat>& x,
                         const std::vector<Rat>& lambda);

// Block-level index selection A: source profile -> target profile,
// (A X)_t = X_{sel[t-1]}. Selector entries are 1-based source slots whose
// dimensions must match the target slot.
struct IndexSelection {
    std::vector<int> source_dims;
    std::vector<int> target_dims;
    std::vector<int> sel;

    bool operator==(const IndexSelection&) const = default;
};

void validate_selection(const IndexSelection& s);
IndexSelection selection_identity(const std::vector<int>& dims);
// a o b: b's target profile must equal a's source profile.
IndexSelection selection_compose(const IndexSelection& a, const IndexSelection& b);

// f o A as polynomial maps; f's slots must match A's target profile. The
// result reads its inputs through the selection, so its slots are A's source
// profile. Parameters pass through untouched.
PolyMap compose_selection(const PolyMap& f, const IndexSelection& a);

// Full polynomial substitution f(g_1, ..., g_arity): slot_args[j] supplies the
// value of slot j+1 as a map with out_dim == slot_dims[j]. All slot_args share
// one signature, which also fixes the result's slots; parameter variables of f
// map to the same parameter variables of that signature.
PolyMap substitute(const PolyMap& f, const std::vector<PolyMap>& slot_args);

// Terms of state degree k+1 and parameter degree l.
PolyMap grade_component(const PolyMap& f, int k, int l);
PolyMap truncate_grades(const PolyMap& f, int max_k, int max_l);
// Sorted list of (k, l) grades with nonzero component.
std::vector<std::pair<int, int>> grades_present(const PolyMap& f);

// Extends f to a wider arity (same slot dimension profile on the first slots)
// by ignoring the new slots.
PolyMap extend_arity(const PolyMap& f, const std::vector<int>& new_slot_dims);

// --- graded monomial bases ----------------------------------------------

// Basis of the space of polynomial maps of one signature whose terms all have
// state degree k+1 and parameter degree l, ordered by (target component,
// monomial order). k >= -1; k == -1 with l == 0 gives the empty basis.
struct GradedBasis {
    int k = 0, l = 0;
    Signature sig;
    std::vector<int> comp_of;   // target component per entry, 1-based
    std::vector<Mono> monos;    // monomial per entry

    int size() const { return static_cast<int>(monos.size()); }
    PolyMap entry(int idx) const;                 // idx 0-based
    std::vector<Rat> coordinates(const PolyMap& f) const;
    PolyMap from_coordinates(const std::vector<Rat>& c) const;
};

GradedBasis make_basis(const Signature& sig, int k, int l);

} // namespace ccnet
