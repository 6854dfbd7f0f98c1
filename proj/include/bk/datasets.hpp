#pragma once

#include <variant>

#include "bk/context.hpp"

namespace bk {

/** A bundled example input. Lattice payloads live in data/<name>.json,
 *  context payloads in data/<name>.cxt. */
struct Dataset {
  std::string name;
  std::string kind;  // "lattice" or "context"
  std::string note;
  std::variant<Lattice, FormalContext> payload;
};

// The five-element nonmodular lattice.
Lattice dataset_n5();
// The five-element modular nondistributive lattice.
Lattice dataset_m3();
// The Boolean lattice with three atoms.
Lattice dataset_b3();
// Seven elements: three atoms, two joins of adjacent atom pairs, bounds.
Lattice dataset_fig4();
// The order dual of fig4.
Lattice dataset_fig4dual();
// Fourteen elements; both of its completions have 17 elements.
Lattice dataset_fig6();
// Sixteen-element distributive extension of fig6 used by fig6_check.
Lattice dataset_fig6_extension();
// Administrative geography of the United Kingdom and surrounding islands.
FormalContext dataset_uk();

const std::vector<Dataset>& bundled_datasets();

}  // namespace bk
