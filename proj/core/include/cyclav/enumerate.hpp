#pragma once

// The sets I_a(q) (admissible last coefficients given the first g-1) and
// their cyclic subsets, by exhaustive scan of the bounded integer range.

#include <span>
#include <vector>

#include "cyclav/arith.hpp"
#include "cyclav/validity.hpp"
#include "cyclav/weil.hpp"

namespace cyclav {

struct EnumWindow {
  std::vector<Int> values;  // sorted ascending
  Int min = 0;
  Int max = 0;
  Int M = 0;  // max - min; 0 when empty
  Mode mode = Mode::Either;

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
};

// Candidate range [lo, hi] for the last coefficient: Hasse bound (g = 1)
// or Rueck condition 1 (g = 2). Empty when lo > hi.
struct CandidateRange {
  Int lo;
  Int hi;
};
CandidateRange candidate_range(unsigned g, std::span<const Int> a_vec, const FieldSize& field);

struct EnumOptions {
  Mode mode = Mode::Either;
  unsigned jobs = 1;
};

EnumWindow enumerate_I(unsigned g, std::span<const Int> a_vec, const FieldSize& field,
                       const EnumOptions& options = {});
EnumWindow enumerate_I_cyclic(unsigned g, std::span<const Int> a_vec, const FieldSize& field,
                              const EnumOptions& options = {});

// Both sets from a single scan.
struct EnumPair {
  EnumWindow all;
  EnumWindow cyclic;
};
EnumPair enumerate_both(unsigned g, std::span<const Int> a_vec, const FieldSize& field,
                        const EnumOptions& options = {});

}  // namespace cyclav
