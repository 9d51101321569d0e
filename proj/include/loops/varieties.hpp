#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loops/loop_table.hpp"
#include "loops/perm.hpp"
#include "loops/term.hpp"

namespace loops {

// A named loop variety. Membership is the conjunction of the entry's own
// identities and of every conjunct entry; all are decided by a full scan over
// variable assignments.
struct VarietyCatalogEntry {
  std::string id;
  std::vector<std::string> aliases;
  std::string description;
  std::vector<Identity> identities;
  std::vector<std::string> conjuncts;
  // Largest number of quantified variables over all identities, including
  // those reached through conjuncts.
  std::size_t arity = 0;
  // True for identities taken in their usual textbook form rather than from
  // a displayed characterization (left and right Bol).
  bool standard_form = false;
};

const std::vector<VarietyCatalogEntry>& catalog();

// Lookup by id or alias, case-insensitive. Throws UnknownVariety.
const VarietyCatalogEntry& find_variety(std::string_view id);

// Every identity the entry requires, conjuncts expanded, without duplicates.
std::vector<const Identity*> required_identities(std::string_view id);

// Throws UnknownVariety.
bool check_variety(const LoopTable& q, std::string_view id);

// An identity of the variety that fails in q together with the assignment.
struct VarietyViolation {
  const Identity* identity;
  std::vector<Element> assignment;
};
std::optional<VarietyViolation> find_variety_violation(const LoopTable& q,
                                                       std::string_view id);

// ---------------------------------------------------------------------------
// Autotopisms and pseudoautomorphisms.

// alpha(x) beta(y) = gamma(xy) for all x, y. Throws DegreeMismatch.
bool is_autotopism(const LoopTable& q, const Perm& alpha, const Perm& beta,
                   const Perm& gamma);

class Autotopism {
 public:
  // nullopt unless (alpha, beta, gamma) is an autotopism of q.
  static std::optional<Autotopism> make(const LoopTable& q, Perm alpha, Perm beta,
                                        Perm gamma);

  const Perm& alpha() const { return alpha_; }
  const Perm& beta() const { return beta_; }
  const Perm& gamma() const { return gamma_; }

  // Componentwise product; autotopisms form a group under it.
  friend Autotopism operator*(const Autotopism& a, const Autotopism& b);
  Autotopism inverse() const;

 private:
  Autotopism(Perm a, Perm b, Perm c)
      : alpha_(std::move(a)), beta_(std::move(b)), gamma_(std::move(c)) {}
  Perm alpha_, beta_, gamma_;
};

enum class NucleusKind { Left, Middle, Right };

// lambda_a = (L_a, id, L_a), mu_a = (R_a^-1, L_a, id), rho_a = (id, R_a, R_a).
bool nucleus_membership_from_autotopism(const LoopTable& q, Element a, NucleusKind kind);

// (L_c beta, beta, L_c beta) is an autotopism.
bool is_left_pseudoautomorphism(const LoopTable& q, const Perm& beta, Element c);
// (alpha, R_c alpha, R_c alpha) is an autotopism.
bool is_right_pseudoautomorphism(const LoopTable& q, const Perm& alpha, Element c);

// Companion of L_{xy}^-1 L_x L_y as a right pseudoautomorphism of an Osborn
// loop: (y / x^rho)(xy)^rho.
Element companion_of_left_inner(const LoopTable& q, Element x, Element y);
// Companion of R_{yx}^-1 R_x R_y as a left pseudoautomorphism of an Osborn
// loop: (yx)^lambda (x^lambda \ y).
Element companion_of_right_inner(const LoopTable& q, Element x, Element y);

// Loops whose isomorphisms from q are exactly the left (right)
// pseudoautomorphisms with companion c: u o v = c\((cu)v), resp.
// u o v = (u(vc))/c.
LoopTable left_companion_isotope(const LoopTable& q, Element c);
LoopTable right_companion_isotope(const LoopTable& q, Element c);

struct GLoopReport {
  // Every principal isotope is isomorphic to q.
  bool by_isotopes = false;
  // Every element is a companion of a left and of a right pseudoautomorphism.
  bool by_companions = false;
};
GLoopReport g_loop_report(const LoopTable& q);
// by_isotopes; throws Inconsistent if the two characterizations disagree.
bool is_g_loop(const LoopTable& q);

// For every x: R_x^-1 L_x R_x = L_x R_x R_{x^lambda} = L_{x^lambda}^-1 and
// R_x R_{x^lambda} L_{x^lambda} L_x = id. Holds in every Osborn loop.
bool osborn_alpha_audit(const LoopTable& q);

}  // namespace loops
