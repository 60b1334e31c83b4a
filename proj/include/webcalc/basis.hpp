#ifndef WEBCALC_BASIS_HPP
#define WEBCALC_BASIS_HPP

#include <cstdint>
#include <string>
#include <vector>
#include "webcalc/web.hpp"

namespace webcalc {

// One basis vector of the space attached to a boundary object: a subset of
// {1..N} per strand (bit i-1 set means color i), of size equal to the strand
// label. Dual strands index dual basis vectors.
using Mask = uint32_t;
using BasisIndex = std::vector<Mask>;

inline int popcount(Mask m) { return __builtin_popcount(m); }

// Colors of a mask in increasing order (1-based).
std::vector<int> mask_colors(Mask m);

// All subsets of {1..N} of size k, in increasing numeric (=lex) order.
const std::vector<Mask>& subsets_of_size(int N, int k);

// Enumerate the full basis of a boundary object (product of per-strand
// subsets), lexicographically. Empty boundary has the single empty index.
std::vector<BasisIndex> enumerate_basis(const BoundaryObject& b);

long space_dimension(const BoundaryObject& b);

// Content vector (length N): +1 per color on an upward strand, -1 on a
// downward strand.
std::vector<int> basis_weight(const BoundaryObject& b, const BasisIndex& idx);

// Rendering used by the operator dump format: {1,3}|{2}* with * marking duals.
std::string basis_index_to_string(const BoundaryObject& b, const BasisIndex& idx);

// Number of inversions in the concatenation of the ordered lists of S and T:
// #{(s,t) in S x T : s > t}.
int inversions(Mask S, Mask T);
// epsilon_S = sum_{i in S} (N+1-2i)
long epsilon_weight(int N, Mask S);

} // namespace webcalc

#endif
