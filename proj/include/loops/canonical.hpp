#pragma once

#include <vector>

#include "loops/loop_table.hpp"

namespace loops {

// Canonical representative of the isomorphism class of q: the relabelling
// (fixing 0) whose table is least when cells are read block by block,
// block k being the cells (i, j) with max(i, j) = k. Found by branch and
// bound over the relabelling, one new label at a time.
LoopTable canonical_form(const LoopTable& q);

// Row-major cells of canonical_form(q).
std::vector<Element> canonical_key(const LoopTable& q);

}  // namespace loops
