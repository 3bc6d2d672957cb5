#pragma once

#include <cstddef>

namespace kecore {

/// Size caps for the exponential routines. Exceeding one raises BudgetExceeded.
struct Budget {
  /// Maximum-independent-set and maximum-matching enumeration.
  int max_enum_n = 20;
  /// Subset sweeps over 2^n vertex sets (critical difference, ker).
  int max_subset_n = 20;
  /// Branch-and-bound independence number on a general component.
  int max_branch_n = 40;
  /// Upper bound on the number of enumerated maximum matchings.
  std::size_t matching_limit = 1'000'000;
  /// Isomorphism dedupe via canonical labelling of general graphs.
  int max_dedupe_n = 10;
  /// Streaming every labelled tree (n^(n-2) of them).
  int max_labeled_tree_n = 12;
};

}  // namespace kecore
