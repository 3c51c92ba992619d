#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aquiver/interval.hpp"
#include "aquiver/orientation.hpp"

namespace aquiver {

struct TableRow {
  std::string support;
  std::string label;
};

/// All indecomposable projectives (or injectives) of an orientation, with
/// one symbolic parameter per open region between sinks and sources. For
/// S = {0 sink, 1 source} the header reads "a < 0 < b < 1 < c".
struct SymbolicTable {
  std::string header;
  std::vector<TableRow> rows;
};

/// Rows are ordered by upper end, then lower end, open before closed.
/// With `range`, only labels positioned in the range are kept.
SymbolicTable indecomposable_table(const Orientation& o, bool injective,
                                   const std::optional<Interval>& range = std::nullopt);

std::string format_table(const SymbolicTable& t);

}  // namespace aquiver
