#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relfix/core.hpp"
#include "relfix/props.hpp"

namespace relfix {

// Largest carrier for which full 2^(n*n) enumeration is supported.
inline constexpr int kMaxEnumerate = 4;

std::uint64_t related_set_count(int n);  // 2^(n*n)
std::uint64_t endo_map_count(int n);     // n^n (1 for n = 0)

// code is row-major: bit i*n+j set iff a_{i+1} <= a_{j+1}. Elements are
// labeled a1..an. Decoding is stateless, so index ranges can be consumed in
// parallel.
RelatedSet nth_related_set(int n, std::uint64_t code);

// code is the base-n numeral f(a1) f(a2) ... f(an), most significant first,
// so ascending codes give lexicographic order of target tuples.
EndoMap nth_endo_map(int n, std::uint64_t code);

std::vector<RelatedSet> enumerate_related_sets(
    int n, const std::vector<Prop>& constraints = {});
std::vector<EndoMap> enumerate_endo_maps(
    const RelatedSet& rel, const std::vector<MapCond>& constraints = {});

// Named instances: "powerset k", "chain k", "divisors k", "all_true k",
// "sign_analysis". sign_analysis is the five-point sign lattice with the
// transfer map of a loop body that joins the abstract value with "pos";
// its least fixed point is the loop invariant.
std::pair<RelatedSet, std::optional<EndoMap>> standard_instance(
    const std::string& name);

// Reproducible pseudo-random relation. Edges are drawn row-major from the
// 64-bit LCG x <- 6364136223846793005*x + 1442695040888963407 seeded with
// seed; an edge is present iff the top 32 bits of the state fall below
// density * 2^32.
RelatedSet random_instance(std::uint64_t seed, int n, double density);

// Stateless 64-bit mixer (splitmix64 finalizer); used for counter-based
// deterministic sampling.
std::uint64_t mix64(std::uint64_t x);

}  // namespace relfix
