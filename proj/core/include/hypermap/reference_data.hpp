#pragma once

#include <span>

#include "hypermap/interpolate.hpp"

namespace hypermap {

/// One published table row: count of rooted hypermaps with v vertices,
/// e edges, f faces (canonical v <= e <= f).
struct RefRow {
  int v, e, f;
  unsigned long long count;
};

/// True for the dart counts with embedded reference tables (1..7 and 13).
bool has_reference(int r);

/// The embedded rows for r, canonically sorted; empty span otherwise.
std::span<const RefRow> reference_rows(int r);

/// The same data as a CoeffTable.
CoeffTable reference_table(int r);

}  // namespace hypermap
