#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "amitsur/quotient_s.hpp"

namespace amitsur {

inline constexpr unsigned kDefaultDepth = 3;
inline constexpr unsigned kDefaultOracleBound = 2;
inline constexpr double kMaxExhaustiveCandidates = 1e8;

// Subgroup of (Z/nZ)* reached by ε̄ on a set of τ-fixed units of S.
// A lower bound for ε̄((S*)^τ); `strategy` says how the units were found.
struct CoverageReport {
  std::size_t n = 0;
  std::uint64_t r = 0;
  std::uint64_t m = 0;
  std::vector<std::pair<SElement, std::uint64_t>> generators;  // (unit, ε̄(unit))
  std::vector<std::uint64_t> subgroup;                         // sorted residues
  bool is_full = false;
  std::string strategy;
};

// ρ + ρ^{-1} and the symmetric sums ρ^{-k} + ... + ρ^k for 3 <= 2k+1 < n.
// Requires odd n >= 3.
std::vector<SElement> dihedral_generators(std::size_t n);

// Product of s over its τ-orbit: s · τ(s) · ... · τ^{m-1}(s).
SElement tau_symmetrize(const SElement& s, const TauData& t);

// Deduplicated τ-fixed units built from ±ρ^i, partial norms N_ρ^j with
// gcd(j, n) = 1 (each symmetrized unless already fixed), the dihedral
// generators when r ≡ -1, and all products of up to `depth` of these.
// Candidates that are already τ-fixed are kept as they are.
std::vector<SElement> fixed_unit_generators(std::size_t n, std::uint64_t r,
                                            unsigned depth = kDefaultDepth);

// Smallest subgroup of (Z/nZ)* containing `residues` (always contains 1).
std::vector<std::uint64_t> subgroup_closure(std::uint64_t n,
                                            const std::vector<std::uint64_t>& residues);

// Breadth-first walk over products of `generators`, keyed by ε̄. Each reached
// residue maps to the first product found; the walk order is fixed by the
// generator order, so representatives are reproducible.
std::map<std::uint64_t, SElement> residue_representatives(std::size_t n,
                                                          const std::vector<SElement>& generators);

CoverageReport coverage_subgroup(std::size_t n, std::uint64_t r, unsigned depth = kDefaultDepth);

// Every canonical S-element with coefficients in [-bound, bound] that is a
// τ-fixed unit, in sorted canonical order. Rejects searches over 1e8 candidates.
// `threads == 0` picks the hardware concurrency.
std::vector<SElement> exhaustive_fixed_units(std::size_t n, std::uint64_t r, unsigned bound,
                                             unsigned threads = 0);

// CoverageReport whose generators are the oracle's units.
CoverageReport exhaustive_coverage(std::size_t n, std::uint64_t r, unsigned bound,
                                   unsigned threads = 0);

struct CyclicReduction {
  std::uint64_t m = 1;  // order of the image subgroup of (Z/pZ)*
  std::uint64_t r = 1;  // smallest positive generator of that subgroup
};

// Given the residues by which a complement acts on C_p, returns the cyclic
// quotient C_p ⋊ C_m data.
CyclicReduction reduce_to_cyclic(std::uint64_t p, const std::vector<std::uint64_t>& action_images);

}  // namespace amitsur
