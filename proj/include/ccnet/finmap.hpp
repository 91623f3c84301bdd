#pragma once
#include <string>
#include <vector>

#include "ccnet/errors.hpp"

namespace ccnet {

// A map {1..domain} -> {1..codomain}. Cells are 1-indexed everywhere;
// images[i-1] is the image of cell i. The codomain is contextual: for the
// maps of a homogeneous network it equals the domain, for typed maps of a
// colored network it is the cell count of the target color.
struct FiniteMap {
    std::vector<int> images;

    FiniteMap() = default;
    explicit FiniteMap(std::vector<int> img) : images(std::move(img)) {}

    int domain() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images[static_cast<size_t>(i) - 1]; }

    bool operator==(const FiniteMap&) const = default;
    auto operator<=>(const FiniteMap&) const = default;
};

// Checks all images lie in {1..codomain}.
void validate_map(const FiniteMap& f, int codomain, const std::string& name);

// (a o b)(i) = a(b(i)). Requires b's images to lie inside a's domain.
FiniteMap compose_maps(const FiniteMap& a, const FiniteMap& b);

std::string map_str(const FiniteMap& f);

// A finite semigroup of maps {1..N} -> {1..N} with its composition table and
// the induced tilde maps on element indices:
//   table[j1-1][j2-1] = index of elements[j1] o elements[j2]  (1-based)
//   tilde[j-1](k)     = table[j-1][k-1],  so  sigma_{tilde_j(k)} = sigma_j o sigma_k.
struct SemigroupTable {
    std::vector<FiniteMap> elements;
    std::vector<std::vector<int>> table;
    std::vector<FiniteMap> tilde;

    int size() const { return static_cast<int>(elements.size()); }
    int compose_index(int j1, int j2) const {
        return table[static_cast<size_t>(j1) - 1][static_cast<size_t>(j2) - 1];
    }
};

// Closes a duplicate-free list of maps {1..N} -> {1..N} under composition.
// Input elements keep their positions; new elements are appended in
// breadth-first discovery order, scanning product pairs (j1, j2) in
// lexicographic index order round by round. The result never exceeds N^N
// elements. Duplicate inputs are a validation error.
SemigroupTable semigroup_closure(const std::vector<FiniteMap>& maps);

// True when j -> tilde_j is injective.
bool is_faithful_tilde(const SemigroupTable& sg);

// Result of iteratively deleting slave cells: cells that are no map's image
// and therefore influence nothing. Maps are restricted to the kept cells,
// relabelled in order, and duplicates that arise get merged.
struct SlaveReduction {
    int reduced_cells = 0;
    std::vector<FiniteMap> maps;      // duplicate-free, on {1..reduced_cells}
    std::vector<int> kept_cells;      // original labels, ascending
    std::vector<int> map_target;      // old map index -> new map index (1-based)
    bool degenerate = false;          // everything removed (empty network)
};

SlaveReduction slave_reduce_maps(int cells, const std::vector<FiniteMap>& maps);

} // namespace ccnet
