#pragma once

#include <optional>
#include <string>

#include "decomp/dfa.hpp"
#include "decomp/partition.hpp"

namespace decomp {

/// Chain of n states over {a}: accepts a^k for k >= n-1. Requires n >= 1.
Dfa gen_ln(int n);

/// Residue counters over {a,b}: accepts #a ≡ 0 (mod k) and #b ≡ 0 (mod l).
/// States q<i>_<j>; requires k, l >= 2.
Dfa gen_lkl(int k, int l);

/// Saturating two-counter grid over {a,b}: a advances the row, b the column,
/// both stick at the last index. Accepts only q<r-1>_<s-1>. Requires r, s >= 2.
Dfa gen_grid(int r, int s);

/// Prepends a chain p0 .. p<k-1> driven by a fresh symbol; old states loop
/// on the fresh symbol, chain states loop on the old alphabet, and
/// p<k-1> moves to the old initial state. The fresh symbol defaults to the
/// first of "c", "d", ..., "z" not already in the alphabet.
Dfa gen_k_extension(const Dfa& a, int k, std::optional<std::string> fresh_symbol = std::nullopt);

/// The two automata of the a^{2k} b^{2l} example with the partition pair
/// that decomposes the non-minimal one.
struct Example31 {
  Dfa minimal;    // a0 a1 b0 b1 R
  Dfa prime;      // a0 a1 b0 b1 R0 R1
  Partition pi1;  // {a0}{a1}{b0,b1}{R0,R1} on `prime`
  Partition pi2;  // {a0,a1,b0,R0}{b1,R1} on `prime`
};
Example31 gen_example31();

/// Minimal automata for a^{4k} b^{4l} (l >= 1), for a^{4k} b^l (l >= 1) and
/// for "#b divisible by 4".
struct A4b4Triple {
  Dfa a;
  Dfa a1;
  Dfa a2;
};
A4b4Triple gen_a4b4_triple();

/// Residue pairs over {a,b,c} (#a mod 3, #b mod 5; c is neutral) accepting
/// (0,0) and (2,4).
Dfa gen_sb_not_asb();

/// Named family plus parameters, as used by the CLI's `gen` subcommand.
struct FamilySpec {
  std::string family;  // ln, lkl, grid, kext, example31_min, example31_prime, a4b4_triple, sb_not_asb
  std::optional<int> n, k, l, r, s;
  /// a4b4_triple: "a" (default), "a1" or "a2".
  std::string part;
};

/// Throws InputError for unknown families, missing or out-of-range parameters.
/// kext extends gen_grid(r, s) by k.
Dfa generate(const FamilySpec& spec);

}  // namespace decomp
