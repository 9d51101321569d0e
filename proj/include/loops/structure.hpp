#pragma once

#include <optional>
#include <vector>

#include "loops/loop_table.hpp"
#include "loops/perm_group.hpp"
#include "loops/subloop_set.hpp"

namespace loops {

// Nuclei by direct scan over all pairs:
//   left   a(xy) = (ax)y
//   middle x(ay) = (xa)y
//   right  (xy)a = x(ya)
SubloopSet left_nucleus(const LoopTable& q);
SubloopSet middle_nucleus(const LoopTable& q);
SubloopSet right_nucleus(const LoopTable& q);
SubloopSet nucleus(const LoopTable& q);
// Nuclear elements commuting with everything.
SubloopSet center(const LoopTable& q);

// Least subset containing seed and 0 closed under mul, ldiv and rdiv.
SubloopSet subloop_generated(const LoopTable& q, const std::vector<Element>& seed);
bool is_subloop(const LoopTable& q, const SubloopSet& s);
// The loop structure on a subloop, relabelled by increasing member id.
LoopTable subloop_table(const LoopTable& q, const SubloopSet& s);

// phi(S) = S for every phi in the materialized Inn(Q).
// Throws NotASubloop, Capped.
bool is_normal_subloop(const LoopTable& q, const SubloopSet& s,
                       std::size_t cap = kDefaultGroupCap);
// phi(S) is a subset of S for every standard generator phi.
// Throws NotASubloop.
bool standard_generator_invariant(const LoopTable& q, const SubloopSet& s);

struct Quotient {
  LoopTable table;
  // projection[x] = id of the coset xS.
  std::vector<Element> projection;
  // Least member of each coset, ascending; coset k has representative
  // representatives[k] and representatives[0] == 0.
  std::vector<Element> representatives;
};

// Q/S with cosets ordered by least member. Throws NotASubloop, NotNormal,
// IllDefined (a coset product that depends on representatives, which can
// only mean the normality check is wrong).
Quotient quotient(const LoopTable& q, const SubloopSet& s,
                  std::size_t cap = kDefaultGroupCap);

// Z_0 = {0}, Z_{i+1}/Z_i = Z(Q/Z_i). Stops when the series reaches Q or
// stalls; the last entry is then Q or the stalled term.
std::vector<SubloopSet> upper_central_series(const LoopTable& q,
                                             std::size_t cap = kDefaultGroupCap);
// Length of the upper central series, or nullopt when it stalls below Q.
std::optional<std::size_t> nilpotency_class(const LoopTable& q,
                                            std::size_t cap = kDefaultGroupCap);

}  // namespace loops
