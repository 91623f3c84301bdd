#pragma once
#include <array>
#include <map>

#include "ccnet/linalg.hpp"
#include "ccnet/network.hpp"

namespace ccnet {

// A colored network: colors 1..C, N_c cells of color c with internal phase
// space of dimension m_c, and for every ordered color pair (d,c) a list of
// typed input maps sigma_j^{(d,c)}: {1..N_c} -> {1..N_d}. When the listed
// maps are closed under the (only sensibly typed) compositions
// sigma^{(e,d)} o sigma^{(d,c)} they form a semigroupoid and `table` holds
// the composition indices.
struct ColoredNetworkSpec {
    int colors = 0;
    int params = 0;
    std::vector<int> cell_counts;  // N_c at [c-1]
    std::vector<int> cell_dims;    // m_c at [c-1]
    // maps[d-1][c-1][j-1] = sigma_j^{(d,c)}
    std::vector<std::vector<std::vector<FiniteMap>>> maps;
    bool has_table = false;
    // {e,d,c,j1,j2} -> 1-based position of sigma_{j1}^{(e,d)} o sigma_{j2}^{(d,c)}
    // among the (e,c) maps
    std::map<std::array<int, 5>, int> table;
    // arity profile of the user-supplied maps before closure
    std::vector<std::vector<int>> original_counts;

    int arity(int d, int c) const {
        return static_cast<int>(maps[static_cast<size_t>(d) - 1][static_cast<size_t>(c) - 1].size());
    }
    const FiniteMap& sigma(int d, int c, int j) const {
        return maps[static_cast<size_t>(d) - 1][static_cast<size_t>(c) - 1][static_cast<size_t>(j) - 1];
    }
    int compose_index(int e, int d, int c, int j1, int j2) const;
};

// Validates and builds a colored network; close == true completes the maps
// to the smallest semigroupoid containing them, close == false keeps the
// lists and attaches the table only when they are already closed.
ColoredNetworkSpec make_colored_network(int colors, const std::vector<int>& cell_counts,
                                        const std::vector<int>& cell_dims, int params,
                                        const std::vector<std::vector<std::vector<FiniteMap>>>& maps,
                                        bool close);

void validate_colored_network(const ColoredNetworkSpec& spec);
void require_colored_table(const ColoredNetworkSpec& spec);

// The closure step by itself, on an already validated spec.
ColoredNetworkSpec semigroupoid_closure(const ColoredNetworkSpec& spec);

// A homogeneous network viewed as one color.
ColoredNetworkSpec colored_from_homogeneous(const NetworkSpec& spec);

// One cell function per color: f^{(c)}: V_1^{n_(1,c)} x ... x V_C^{n_(C,c)} -> V_c.
struct ColoredPolyFamily {
    std::vector<PolyMap> comp;  // f^{(c)} at [c-1]
};

// Signature of f^{(c)}: slots are the pairs (d,j), d major, of dimension m_d.
Signature colored_profile_sig(const ColoredNetworkSpec& spec, int c);
// Signature of maps on the full state V_1^{N_1} x ... x V_C^{N_C}; slots are
// the cells in color-major order.
Signature colored_full_sig(const ColoredNetworkSpec& spec);

// 1-based position of slot (d,j) in the arity profile of color c.
int colored_slot_index(const ColoredNetworkSpec& spec, int c, int d, int j);
// 1-based position of cell (c,i) among all cells, color major.
int colored_cell_index(const ColoredNetworkSpec& spec, int c, int i);
// 0-based first state variable of cell (c,i) in the full state signature.
int colored_state_offset(const ColoredNetworkSpec& spec, int c, int i);

void validate_colored_family(const ColoredNetworkSpec& spec, const ColoredPolyFamily& f);
ColoredPolyFamily zero_colored_family(const ColoredNetworkSpec& spec);

// pi_i^{(c)}: full state -> profile of c, slot (d,j) reads cell sigma_j^{(d,c)}(i).
IndexSelection colored_pi(const ColoredNetworkSpec& spec, int c, int i);

// A_{sigma_j^{(d,c)}}: profile of c -> profile of d, the unique linear map with
// A o pi_i^{(c)} = pi^{(d)}_{sigma_j^{(d,c)}(i)}; requires a semigroupoid.
IndexSelection colored_a_map(const ColoredNetworkSpec& spec, int d, int c, int j);

// (f o_Sigma g)^{(c)} = f^{(c)} o (g^{(d)} o A_{sigma_j^{(d,c)}})_{(d,j)}, so that
// gamma_f o gamma_g = gamma_{f o_Sigma g}.
ColoredPolyFamily colored_compose(const ColoredNetworkSpec& spec, const ColoredPolyFamily& f,
                                  const ColoredPolyFamily& g);

// [f,g]_Sigma^{(c)} = sum_{d,j} D_{X_j^{(d)}}f^{(c)} . (g^{(d)} o A_{sigma_j^{(d,c)}})
//                   - D_{X_j^{(d)}}g^{(c)} . (f^{(d)} o A_{sigma_j^{(d,c)}}), so that
// [gamma_f, gamma_g] = gamma_{[f,g]_Sigma}.
ColoredPolyFamily colored_bracket(const ColoredNetworkSpec& spec, const ColoredPolyFamily& f,
                                  const ColoredPolyFamily& g);

// gamma_f evaluated at a full state point, exactly.
std::vector<Rat> colored_gamma_eval(const ColoredNetworkSpec& spec, const ColoredPolyFamily& f,
                                    const std::vector<Rat>& x, const std::vector<Rat>& lambda);

// The cell components f^{(c)} o pi_i^{(c)} of gamma_f, color major.
std::vector<PolyMap> colored_gamma_symbolic(const ColoredNetworkSpec& spec,
                                            const ColoredPolyFamily& f);

// Matrix of gamma_{f0} on the full state for a linear family (grade (0,0)).
RationalMatrix colored_gamma_matrix(const ColoredNetworkSpec& spec, const ColoredPolyFamily& f0);

// A family written against the original (pre-closure) arity profile widened
// to the closed profile by ignoring the appended slots.
ColoredPolyFamily colored_extend_family(const ColoredNetworkSpec& spec,
                                        const ColoredPolyFamily& f);

// SN-decomposition of a linear colored network map through the flattened
// gamma matrix: gamma_{f0_S} semisimple, gamma_{f0_N} nilpotent, both again
// colored network maps. Experimental: the grading convention flattens all
// colors into one product space.
struct ColoredSnSplit {
    ColoredPolyFamily f0, f0_S, f0_N;
    UPoly witness;
};

ColoredSnSplit colored_sn_decompose(const ColoredNetworkSpec& spec, const ColoredPolyFamily& f0);

} // namespace ccnet
