#pragma once
#include <optional>

#include "ccnet/finmap.hpp"
#include "ccnet/linalg.hpp"
#include "ccnet/poly.hpp"

namespace ccnet {

// A homogeneous network: cells 1..N, one internal phase space V of dimension
// `dim` per cell, input maps sigma_j on the cells, and (when the maps form a
// semigroup) their composition table. `params` is the number of parameters
// the admissible functions carry. `original_n` remembers the arity of user
// functions before a closure extended the map list.
struct NetworkSpec {
    int cells = 0;
    int dim = 1;
    int params = 0;
    std::vector<FiniteMap> maps;
    std::optional<SemigroupTable> table;
    int original_n = 0;

    int arity() const { return static_cast<int>(maps.size()); }
    bool is_semigroup() const { return table.has_value(); }
};

// Validates and builds a network. With close == true the map list is closed
// under composition first (the table comes from the closure); with false the
// list is kept as given and the table is attached only if the list is already
// closed as a set.
NetworkSpec make_network(int cells, int dim, int params,
                         const std::vector<FiniteMap>& maps, bool close);

void validate_network(const NetworkSpec& spec);
const SemigroupTable& require_table(const NetworkSpec& spec);

// Signature of the admissible cell functions f: V^n x R^p -> V.
Signature network_sig(const NetworkSpec& spec);
// Signature of maps on the total phase space V^N.
Signature full_state_sig(const NetworkSpec& spec);

// pi_i: V^N -> V^n, slot j reads cell sigma_j(i).
IndexSelection pi(const NetworkSpec& spec, int i);

// A_{sigma_j}: V^n -> V^n, slot k reads slot tilde_k(j); requires a semigroup.
IndexSelection a_map(const NetworkSpec& spec, int j);

// gamma_f(x)_i = f(x_{sigma_1(i)}, ..., x_{sigma_n(i)}; lambda), exactly.
std::vector<Rat> gamma_eval(const NetworkSpec& spec, const PolyMap& f,
                            const std::vector<Rat>& x, const std::vector<Rat>& lambda);

// The N cell components of gamma_f as polynomial maps on the full state.
std::vector<PolyMap> gamma_symbolic(const NetworkSpec& spec, const PolyMap& f);

// Matrix of gamma_{f0} on V^N for linear homogeneous f0 (grade (0,0)).
RationalMatrix gamma_matrix(const NetworkSpec& spec, const PolyMap& f0);

// The fundamental network: n cells carrying the tilde maps. Its cell
// functions are the components Gamma_f_j = f o A_{sigma_j}. When the tilde
// collection is not faithful the result has duplicate maps and no table, and
// `faithful` is false.
struct FundamentalNetwork {
    NetworkSpec net;
    bool faithful = true;
};

FundamentalNetwork fundamental_network(const NetworkSpec& spec);

// Components of Gamma_f on the fundamental network: f o A_{sigma_j} for each j.
std::vector<PolyMap> fundamental_components(const NetworkSpec& spec, const PolyMap& f);

// Slave reduction at network level.
struct NetworkSlaveReduction {
    NetworkSpec reduced;
    std::vector<int> kept_cells;
    std::vector<int> map_target;  // old map index -> new map index, 1-based
    bool degenerate = false;
};

NetworkSlaveReduction slave_reduce(const NetworkSpec& spec);

// f of the network's original arity widened to the full closed map list by
// ignoring the appended slots.
PolyMap extend_function(const NetworkSpec& spec, const PolyMap& f);

} // namespace ccnet
