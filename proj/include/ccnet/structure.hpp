#pragma once
#include "ccnet/network.hpp"

namespace ccnet {

// A partition of the cells in canonical form: blocks sorted by least element,
// members ascending.
struct Partition {
    std::vector<std::vector<int>> blocks;
    bool operator==(const Partition&) const = default;
};

Partition partition_from_labels(const std::vector<int>& block_of);  // 1-based cells

// All permutations p of the cells with p o sigma_j = sigma_j o p for every j,
// in lexicographic order. Exhaustive search; refuses networks with more than
// 10 cells.
std::vector<FiniteMap> network_symmetries(const NetworkSpec& spec);

// All balanced partitions: sigma_j never splits a block across two blocks,
// equivalently every synchrony subspace is invariant. Ordered by block count,
// then lexicographically by block labels. Refuses more than 12 cells.
std::vector<Partition> balanced_partitions(const NetworkSpec& spec);

// Symmetries and balanced partitions are unchanged when the map list is
// closed under composition. The report recomputes both sides; a mismatch is
// an internal invariant violation.
struct ClosureInvarianceReport {
    std::vector<FiniteMap> symmetries;
    std::vector<Partition> partitions;
    int raw_maps = 0;
    int closed_maps = 0;
};

ClosureInvarianceReport closure_invariance_report(const NetworkSpec& spec);

// A dynamical input symmetry: a cell permutation p and an index map q with
// p o sigma_j = sigma_{q(j)} o p for every j. q is determined by p and is
// automatically a permutation of the input indices.
struct InputSymmetry {
    FiniteMap p, q;
    bool operator==(const InputSymmetry&) const = default;
};

// All dynamical input symmetries, ordered by p. Refuses more than 10 cells.
std::vector<InputSymmetry> dynamical_input_symmetries(const NetworkSpec& spec);

// Slot permutation lambda_q: (lambda_q X)_k = X_{q(k)}.
IndexSelection lambda_selection(const NetworkSpec& spec, const FiniteMap& q);

// Echelon basis of the G-invariant subspace of grade (k, l): all h with
// h o lambda_q o pi_i == h o pi_i for every listed symmetry and every cell.
// Invariance is imposed on the pi-images only, which is where the dynamics
// lives.
struct InvariantSubbasis {
    GradedBasis basis;
    std::vector<std::vector<Rat>> vectors;  // echelon rows in basis coordinates
    std::vector<PolyMap> elements;
};

InvariantSubbasis invariant_subbasis(const NetworkSpec& spec,
                                     const std::vector<InputSymmetry>& group, int k, int l);

} // namespace ccnet
