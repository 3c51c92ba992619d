#pragma once

#include <optional>
#include <vector>

#include "aquiver/morphism.hpp"

namespace aquiver {

/// 0 -> U --f--> V --g--> W -> 0 given by its two maps.
struct ShortSequence {
  Morphism f;
  Morphism g;
};

/// An almost split sequence between interval modules. The maps are [1;1]
/// into the middle and [1 -1] out of it, summands in `middle` order.
struct ARSequence {
  Interval left;
  std::vector<Interval> middle;
  Interval right;
  ShortSequence maps;
};

enum class ARStatus { exists, proven_nonexistent, out_of_paper_scope };

struct ARAnswer {
  ARStatus status;
  std::optional<ARSequence> sequence;  // set exactly when status == exists
};

std::string status_name(ARStatus s);

/// The almost split sequence ending at M_W, when it is one of the known
/// shapes; point modules away from sinks and sources have none.
ARAnswer ar_ending_at(const Orientation& o, const Interval& w, Field field = Field::rationals());
ARAnswer ar_starting_at(const Orientation& o, const Interval& u, Field field = Field::rationals());

struct AlmostSplitReport {
  bool exact = false;
  bool not_split = false;
  bool ends_indecomposable = false;
  bool left_factorizations = true;
  bool right_factorizations = true;
  std::size_t probes_used = 0;  // probes with a nonzero map to check
  bool ok() const {
    return exact && not_split && ends_indecomposable && left_factorizations && right_factorizations;
  }
};

/// Checks exactness, that f is not a section and g not a retraction, that
/// both ends are indecomposable, and that every nonzero map from a probe
/// to W (or from U to a probe) factors through g (or f). Probes isomorphic
/// to the end in question are skipped. `threads` only changes speed.
AlmostSplitReport check_almost_split(const ShortSequence& seq, const std::vector<Interval>& probes,
                                     unsigned threads = 1);

bool verify_almost_split(const ARSequence& seq, const std::vector<Interval>& probes, unsigned threads = 1);

/// `count` intervals near the sequence, those with a nonzero map to its right
/// end or from its left end first.
std::vector<Interval> standard_probe_family(const Orientation& o, const ARSequence& seq,
                                            std::size_t count = 50);

}  // namespace aquiver
