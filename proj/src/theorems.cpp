#include "loops/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "loops/error.hpp"
#include "loops/structure.hpp"
#include "loops/varieties.hpp"

namespace loops {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::NotApplicable: return "N/A";
  }
  return "?";
}

bool TheoremReport::any_fail() const { return count(CheckStatus::Fail) != 0; }

std::size_t TheoremReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == status; }));
}

LoopTable dihedral_group(std::size_t m) {
  const std::size_t n = 2 * m;
  std::vector<Element> cells(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t i = u % m, a = u / m, k = v % m, b = v / m;
      const std::size_t rot = a == 0 ? (i + k) % m : (i + m - k) % m;
      cells[u * n + v] = static_cast<Element>(rot + m * ((a + b) % 2));
    }
  }
  return LoopTable::from_cells_unchecked(n, std::move(cells));
}

namespace {

struct Capped {};

class Verifier {
 public:
  Verifier(const LoopTable& q, const VerifyOptions& options)
      : q_(q), opt_(options), n_(q.order()) {
    for (std::size_t x = 0; x < n_; ++x) {
      L_.push_back(left_translation(q, el(x)));
      R_.push_back(right_translation(q, el(x)));
      Li_.push_back(invert(L_.back()));
      Ri_.push_back(invert(R_.back()));
    }
    id_ = Perm::identity(n_);
    nl_ = left_nucleus(q);
    nm_ = middle_nucleus(q);
    nr_ = right_nucleus(q);
    n_all_ = nucleus(q);
    z_ = center(q);
  }

  TheoremReport run();

 private:
  static Element el(std::size_t x) { return static_cast<Element>(x); }
  Element mul(std::size_t x, std::size_t y) const { return q_.mul(el(x), el(y)); }
  Element lam(std::size_t x) const { return q_.left_inv(el(x)); }
  Element rho(std::size_t x) const { return q_.right_inv(el(x)); }

  bool is(std::string_view id) {
    auto it = flags_.find(std::string(id));
    if (it != flags_.end()) return it->second;
    const bool v = check_variety(q_, id);
    flags_.emplace(std::string(id), v);
    return v;
  }

  bool atp(const Perm& a, const Perm& b, const Perm& c) const { return is_autotopism(q_, a, b, c); }
  bool for_all_x(const std::function<bool(std::size_t)>& f) const {
    for (std::size_t x = 0; x < n_; ++x) {
      if (!f(x)) return false;
    }
    return true;
  }
  bool for_all_xy(const std::function<bool(std::size_t, std::size_t)>& f) const {
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        if (!f(x, y)) return false;
      }
    }
    return true;
  }
  bool squares_in(const SubloopSet& s) const {
    return for_all_x([&](std::size_t x) { return s.contains(mul(x, x)); });
  }
  bool is_left_translation(const Perm& p) const { return p == L_[p(0)]; }

  // Lazily built groups; throw Capped past the cap.
  const PermGroup& group(std::optional<PermGroup>& slot, bool& capped,
                         const std::function<PermGroup()>& make) {
    if (capped) throw Capped{};
    if (!slot) {
      try {
        slot = make();
      } catch (const LoopError& e) {
        if (e.kind() != ErrorKind::Capped) throw;
        capped = true;
        throw Capped{};
      }
    }
    return *slot;
  }
  const PermGroup& Mlt() { return group(mlt_, mlt_capped_, [&] { return mlt(q_, opt_.cap); }); }
  const PermGroup& MltL() { return group(mltl_, mltl_capped_, [&] { return mlt_left(q_, opt_.cap); }); }
  const PermGroup& MltR() { return group(mltr_, mltr_capped_, [&] { return mlt_right(q_, opt_.cap); }); }
  const PermGroup& Inn() { return group(inn_, inn_capped_, [&] { return stabilizer(Mlt(), 0); }); }
  const PermGroup& InnL() { return group(innl_, innl_capped_, [&] { return inn_left(q_, opt_.cap); }); }
  const PermGroup& InnR() { return group(innr_, innr_capped_, [&] { return inn_right(q_, opt_.cap); }); }
  const PermGroup& InnLR() {
    return group(innlr_, innlr_capped_, [&] {
      std::vector<Perm> gens;
      for (std::size_t x = 0; x < n_; ++x) {
        for (std::size_t y = 0; y < n_; ++y) gens.push_back(commutator(L_[x], R_[y]));
      }
      return closure(n_, gens, opt_.cap);
    });
  }

  bool normal(const SubloopSet& s) {
    if (!is_subloop(q_, s)) return false;
    // Invariance under Inn; the generators suffice.
    for (const Perm& g : Inn().generators()) {
      for (Element e : s.members()) {
        if (!s.contains(g(e))) return false;
      }
    }
    return true;
  }

  void add(std::string id, std::optional<bool> outcome, std::string note = {}) {
    CheckStatus st = !outcome ? CheckStatus::NotApplicable
                     : *outcome ? CheckStatus::Pass
                                : CheckStatus::Fail;
    report_.checks.push_back({std::move(id), st, std::move(note)});
  }
  // Hypothesis-guarded check; the conclusion runs only when `when` holds.
  void check(std::string id, bool when, const std::function<bool()>& conclusion) {
    if (!when) {
      add(std::move(id), std::nullopt);
      return;
    }
    try {
      add(std::move(id), conclusion());
    } catch (const Capped&) {
      add(std::move(id), std::nullopt, "group cap exceeded");
    }
  }
  static bool all_equal(std::initializer_list<bool> v) {
    return std::all_of(v.begin(), v.end(), [&](bool b) { return b == *v.begin(); });
  }
  static bool not_exactly_two(std::initializer_list<bool> v) {
    return std::count(v.begin(), v.end(), true) != 2;
  }

  void lc_family();
  void extra_and_bol();
  void nuclear_subloop();
  void osborn_identities();
  void osborn_structure();
  void conjugacy_closed();
  void g_loops();
  void buchsteiner();
  void two_of_three();
  void cross_paths();
  void proper_osborn_16();

  const LoopTable& q_;
  VerifyOptions opt_;
  std::size_t n_;
  std::vector<Perm> L_, R_, Li_, Ri_;
  Perm id_;
  SubloopSet nl_, nm_, nr_, n_all_, z_;
  std::map<std::string, bool> flags_;
  std::optional<PermGroup> mlt_, mltl_, mltr_, inn_, innl_, innr_, innlr_;
  bool mlt_capped_ = false, mltl_capped_ = false, mltr_capped_ = false, inn_capped_ = false,
       innl_capped_ = false, innr_capped_ = false, innlr_capped_ = false;
  TheoremReport report_;
};

void Verifier::lc_family() {
  const auto holds_text = [&](const char* text) { return holds(parse_identity(text), q_); };
  const bool c1 = is("lc");
  const bool c2 = holds_text("(x*x)*(y*z) = (x*(x*y))*z");
  const bool c3 = holds_text("((x*x)*y)*z = x*(x*(y*z))");
  const bool c4 = holds_text("y*(x*(x*z)) = (y*(x*x))*z");
  const bool c5 = is("lap") && squares_in(nl_);
  const bool c6 = is("lap") && squares_in(nm_);
  const bool c7 = is("lip") && squares_in(nl_);
  const bool c8 = for_all_x([&](std::size_t x) {
    const Perm l2 = L_[x] * L_[x];
    return atp(l2, id_, l2);
  });
  const bool c9 = for_all_xy([&](std::size_t x, std::size_t y) {
    return is_left_translation(L_[x] * L_[x] * L_[y]);
  });
  const bool c10 = for_all_xy([&](std::size_t x, std::size_t y) {
    return is_left_translation(L_[y] * L_[x] * L_[x]);
  });
  add("lc_equivalences", all_equal({c1, c2, c3, c4, c5, c6, c7, c8, c9, c10}));

  const bool d1 = is("lc") && is("rc");
  const bool d2 = is("ip") && squares_in(n_all_);
  const bool d3 = is("ap") && squares_in(nm_);
  const bool d4 = is("c");
  const bool d5 = for_all_x([&](std::size_t x) {
    return atp(Ri_[x] * Ri_[x], L_[x] * L_[x], id_);
  });
  add("c_equivalences", all_equal({d1, d2, d3, d4, d5}));

  add("nuclei_by_autotopism", for_all_x([&](std::size_t a) {
        return nucleus_membership_from_autotopism(q_, el(a), NucleusKind::Left) == nl_.contains(el(a)) &&
               nucleus_membership_from_autotopism(q_, el(a), NucleusKind::Middle) == nm_.contains(el(a)) &&
               nucleus_membership_from_autotopism(q_, el(a), NucleusKind::Right) == nr_.contains(el(a));
      }));
  check("lip_nuclei", is("lip"), [&] { return nl_ == nm_; });
  check("rip_nuclei", is("rip"), [&] { return nr_ == nm_; });
  check("lc_nucleus_normal", is("lc"), [&] { return is("lip") && nl_ == nm_ && normal(nl_); });
  check("rc_nucleus_normal", is("rc"), [&] { return is("rip") && nr_ == nm_ && normal(nr_); });
  // In an LC loop, conjugates of middle-nuclear elements stay in the middle
  // nucleus and T_x, T_x^-1 act on them as conjugation.
  check("lc_conjugates", is("lc"), [&] {
    return for_all_x([&](std::size_t x) {
      for (Element a : nm_.members()) {
        const Element conj = q_.mul(mul(x, a), lam(x));
        if (!nm_.contains(conj)) return false;
        const Element t = q_.rdiv(mul(x, a), el(x));        // T_x(a)
        const Element ti = q_.ldiv(el(x), q_.mul(a, el(x)));  // T_x^-1(a)
        if (t != conj || ti != q_.mul(lam(x), q_.mul(a, el(x)))) return false;
      }
      return true;
    });
  });
}

void Verifier::extra_and_bol() {
  add("lcc_lc_lbol", not_exactly_two({is("lcc"), is("lc"), is("lbol")}));
  add("rcc_rc_rbol", not_exactly_two({is("rcc"), is("rc"), is("rbol")}));
  check("lbol_lc_squares", is("lbol"), [&] { return is("lc") == squares_in(nl_); });
  check("rbol_rc_squares", is("rbol"), [&] { return is("rc") == squares_in(nr_); });
  const bool i = is("extra");
  const bool ii = is("lc") && (is("rbol") || is("rcc") || is("buchsteiner"));
  const bool iii = is("c") && (is("lbol") || is("lcc"));
  add("extra_equivalences", all_equal({i, ii, iii}));
}

void Verifier::nuclear_subloop() {
  // S = N_lambda meet N_mu. When T_x and T_x^-1 map S into itself, S is
  // normal and L_{xy}^-1 L_x L_y agrees with T_{xy}^-1 T_x T_y on S.
  const SubloopSet s = nl_.intersect(nm_);
  const bool t_inv = for_all_x([&](std::size_t x) {
    const Perm t = Ri_[x] * L_[x];
    const Perm ti = invert(t);
    for (Element e : s.members()) {
      if (!s.contains(t(e)) || !s.contains(ti(e))) return false;
    }
    return true;
  });
  check("nuclear_t_invariance_normal", t_inv, [&] { return normal(s); });
  check("nuclear_inner_as_t", t_inv, [&] {
    return for_all_xy([&](std::size_t x, std::size_t y) {
      const std::size_t xy = mul(x, y);
      const Perm ll = Li_[xy] * L_[x] * L_[y];
      const Perm tt = invert(Ri_[xy] * L_[xy]) * (Ri_[x] * L_[x]) * (Ri_[y] * L_[y]);
      for (Element e : s.members()) {
        if (ll(e) != tt(e)) return false;
      }
      return true;
    });
  });
}

void Verifier::osborn_identities() {
  bool ids[8];
  for (int k = 0; k < 8; ++k) ids[k] = is("osborn" + std::to_string(k + 1));
  add("osborn_equivalences",
      all_equal({ids[0], ids[1], ids[2], ids[3], ids[4], ids[5], ids[6], ids[7]}));
  const bool osb = is("osborn");
  const bool psi = for_all_x([&](std::size_t x) {
    return atp(Li_[lam(x)], R_[x], L_[x] * R_[x]);
  });
  add("osborn_psi_autotopism", osb == psi);
  add("osborn_opposite", osb == check_variety(opposite(q_), "osborn"));
  check("moufang_is_osborn", is("moufang"), [&] { return osb; });
  check("cc_is_osborn", is("cc"), [&] { return osb; });
  check("vd_is_osborn", is("vd"), [&] { return osb; });
  check("osborn_moufang_criteria", osb, [&] {
    const bool m = is("moufang");
    return all_equal({m, is("lip"), is("rip"), is("flx"), is("lap"), is("rap"), is("aaip")});
  });
  add("gen_moufang_is_wip_osborn", is("gen_moufang") == (osb && is("wip")));
  check("cip_osborn_commutative_moufang", osb && is("cip"),
        [&] { return is("commutative") && is("moufang"); });
  check("osborn_alpha", osb, [&] { return osborn_alpha_audit(q_); });
}

void Verifier::osborn_structure() {
  const bool osb = is("osborn");
  check("osborn_translation_conjugates", osb, [&] {
    return for_all_xy([&](std::size_t x, std::size_t y) {
      const Element xl = lam(x), xr = rho(x);
      return Ri_[x] * L_[y] * R_[x] == Li_[xl] * L_[mul(xl, y)] &&
             Li_[x] * R_[y] * L_[x] == Ri_[xr] * R_[mul(y, xr)] &&
             R_[x] * L_[y] * Ri_[x] == Li_[x] * L_[q_.ldiv(xl, el(y))] &&
             L_[x] * R_[y] * Li_[x] == Ri_[x] * R_[q_.rdiv(el(y), xr)];
    });
  });
  check("osborn_mlt_normal", osb, [&] {
    return is_normal_subgroup(MltL(), Mlt()) && is_normal_subgroup(MltR(), Mlt());
  });
  check("osborn_inner_commutators", osb, [&] {
    const bool eqs = for_all_xy([&](std::size_t x, std::size_t y) {
      const Element xl = lam(x), yr = rho(y);
      const Perm c = commutator_LR(q_, el(y), el(x));
      return c == invert(Li_[mul(xl, y)] * L_[xl] * L_[y]) &&
             c == Ri_[mul(x, yr)] * R_[yr] * R_[x];
    });
    return eqs && InnL().same_elements(InnR()) && InnL().same_elements(InnLR());
  });
  check("osborn_nuclei", osb, [&] { return nl_ == nm_ && nm_ == nr_ && normal(n_all_); });
  check("osborn_pseudo_companions", osb, [&] {
    return for_all_xy([&](std::size_t x, std::size_t y) {
      const Perm ll = Li_[mul(x, y)] * L_[x] * L_[y];
      const Perm rr = Ri_[mul(y, x)] * R_[x] * R_[y];
      return is_right_pseudoautomorphism(q_, ll, companion_of_left_inner(q_, el(x), el(y))) &&
             is_left_pseudoautomorphism(q_, rr, companion_of_right_inner(q_, el(x), el(y)));
    });
  });
  check("osborn_automorphisms", osb, [&] {
    return for_all_x([&](std::size_t x) {
      const Perm a = L_[lam(x)] * L_[x];
      const Perm b = R_[x] * R_[lam(x)];
      return a == L_[x] * L_[rho(x)] && b == R_[rho(x)] * R_[x] && atp(a, a, a) && atp(b, b, b);
    });
  });
  // A normal Mlt_lambda gives a normal right nucleus, a normal Mlt_rho a
  // normal left nucleus.
  try {
    const bool ml = is_normal_subgroup(MltL(), Mlt());
    const bool mr = is_normal_subgroup(MltR(), Mlt());
    check("mlt_normal_nucleus_normal", ml || mr,
          [&] { return (!ml || normal(nr_)) && (!mr || normal(nl_)); });
  } catch (const Capped&) {
    add("mlt_normal_nucleus_normal", std::nullopt, "group cap exceeded");
  }
  check("automorphic_osborn_quotient", osb && (is("left_a") || is("right_a")), [&] {
    const LoopTable f = quotient(q_, n_all_, opt_.cap).table;
    return check_variety(f, "commutative") && check_variety(f, "moufang");
  });
}

void Verifier::conjugacy_closed() {
  check("cc_quotient_abelian", is("cc"), [&] {
    const LoopTable f = quotient(q_, n_all_, opt_.cap).table;
    return check_variety(f, "commutative") && check_variety(f, "associative");
  });
  const bool lcc_pseudo = for_all_x([&](std::size_t x) {
    return is_right_pseudoautomorphism(q_, Ri_[x] * L_[x], el(x));
  });
  const bool rcc_pseudo = for_all_x([&](std::size_t x) {
    return is_left_pseudoautomorphism(q_, Li_[x] * R_[x], el(x));
  });
  add("cc_pseudoautomorphisms", is("lcc") == lcc_pseudo && is("rcc") == rcc_pseudo &&
                                    is("cc") == (lcc_pseudo && rcc_pseudo));
  const bool vd_pseudo = for_all_x([&](std::size_t x) {
    const Perm t = Ri_[x] * L_[x];
    return is_left_pseudoautomorphism(q_, t, el(x)) &&
           is_right_pseudoautomorphism(q_, invert(t), el(x));
  });
  add("vd_pseudoautomorphisms", is("vd") == vd_pseudo);
  check("osborn_cc_lcc_rcc", is("osborn"), [&] { return all_equal({is("cc"), is("lcc"), is("rcc")}); });
  check("wip_lcc_rcc", is("wip") && (is("lcc") || is("rcc")), [&] { return is("cc"); });
  check("wip_cc_buchsteiner", is("wip"), [&] { return is("cc") == is("buchsteiner"); });
}

void Verifier::g_loops() {
  if (n_ > opt_.gloop_max_order) {
    add("cc_g_loop", std::nullopt, "order above G-loop limit");
    add("vd_g_loop", std::nullopt, "order above G-loop limit");
    add("g_loop_characterizations", std::nullopt, "order above G-loop limit");
    return;
  }
  const GLoopReport g = g_loop_report(q_);
  check("cc_g_loop", is("cc"), [&] { return g.by_isotopes; });
  check("vd_g_loop", is("vd"), [&] { return g.by_isotopes; });
  add("g_loop_characterizations", g.by_isotopes == g.by_companions);
}

void Verifier::buchsteiner() {
  const bool buch = is("buchsteiner");
  add("buchsteiner_phi", buch == for_all_x([&](std::size_t x) {
                           return atp(L_[x], Ri_[x], L_[x] * Ri_[x]);
                         }));
  check("buchsteiner_square_translations", buch, [&] {
    return for_all_x([&](std::size_t x) {
      const std::size_t x2 = mul(x, x);
      return L_[x2] == L_[x] * Ri_[x] * L_[x] * R_[x] && R_[x2] == R_[x] * Li_[x] * R_[x] * L_[x] &&
             R_[x] * R_[x] * Li_[x2] * L_[x] * L_[x] == R_[x2];
    });
  });
  add("nuclear_square_translation", for_all_x([&](std::size_t x) {
        const std::size_t x2 = mul(x, x);
        return !n_all_.contains(el(x2)) || L_[x2] == L_[x] * Li_[lam(x)];
      }));
  check("osborn_nuclear_square_translation", is("osborn"), [&] {
    return for_all_x([&](std::size_t x) {
      const std::size_t x2 = mul(x, x);
      return !n_all_.contains(el(x2)) || L_[x2] == L_[x] * Ri_[x] * L_[x] * R_[x];
    });
  });
  add("jaiyeola_delta", is("jaiyeola") == for_all_x([&](std::size_t x) {
                          const Perm l2 = L_[x] * L_[x];
                          return atp(l2, L_[lam(x)] * L_[x], l2);
                        }));
}

void Verifier::two_of_three() {
  const bool osb = is("osborn"), buch = is("buchsteiner"), nsq = is("nuclear_squares");
  add("osborn_buchsteiner_squares", not_exactly_two({osb, buch, nsq}));
  check("osborn_buchsteiner_gamma", osb && buch, [&] {
    return for_all_x([&](std::size_t x) {
      const Perm a = L_[x] * Li_[lam(x)];
      const Perm c = L_[x] * Ri_[x] * L_[x] * R_[x];
      const std::size_t x2 = mul(x, x);
      return atp(a, id_, c) && a == L_[x2] && c == L_[x2];
    });
  });
  add("osborn_buchsteiner_jaiyeola", not_exactly_two({osb, buch, is("jaiyeola")}));
  const bool gm = is("gen_moufang"), wipcc = is("wip") && is("cc");
  add("gen_moufang_wip_cc_squares", not_exactly_two({gm, wipcc, nsq}));
  add("gen_moufang_wip_cc_jaiyeola", not_exactly_two({gm, wipcc, is("jaiyeola")}));
}

void Verifier::cross_paths() {
  // Fixed points: Inn_lambda fixes exactly the right nucleus, Inn_rho the
  // left one, and the [L_x, R_y] the middle one.
  try {
    add("nuclei_fixed_points", fixed_points(InnL()) == nr_ && fixed_points(InnR()) == nl_ &&
                                   fixed_points(InnLR()) == nm_);
  } catch (const Capped&) {
    add("nuclei_fixed_points", std::nullopt, "group cap exceeded");
  }
  try {
    const std::vector<Perm> gens = standard_generator_perms(q_);
    add("inn_standard_generators", Inn().same_elements(closure(n_, gens, opt_.cap)));
  } catch (const Capped&) {
    add("inn_standard_generators", std::nullopt, "group cap exceeded");
  } catch (const LoopError& e) {
    if (e.kind() != ErrorKind::Capped) throw;
    add("inn_standard_generators", std::nullopt, "group cap exceeded");
  }
  try {
    bool ok = true;
    for (const SubloopSet* s : {&nl_, &nm_, &nr_, &n_all_, &z_}) {
      if (normal(*s) && !standard_generator_invariant(q_, *s)) ok = false;
    }
    add("normal_implies_invariant", ok);
  } catch (const Capped&) {
    add("normal_implies_invariant", std::nullopt, "group cap exceeded");
  }
}

void Verifier::proper_osborn_16() {
  const bool proper = n_ == 16 && is("osborn") && !is("cc") && !is("moufang");
  if (!proper) {
    add("proper_osborn_16_profile", std::nullopt);
    return;
  }
  try {
    std::string note;
    bool ok = z_.size() == 2 && z_ == n_all_;
    if (!ok) note += "center ";
    bool d8 = false;
    const LoopTable dih = dihedral_group(4);
    for (std::size_t a = 1; a < n_ && !d8; ++a) {
      for (std::size_t b = a + 1; b < n_ && !d8; ++b) {
        const SubloopSet s = subloop_generated(q_, {el(a), el(b)});
        if (s.size() == 8 && isomorphic(subloop_table(q_, s), dih)) d8 = true;
      }
    }
    if (!d8) note += "d8 ";
    ok = ok && d8;
    const LoopTable f = quotient(q_, z_, opt_.cap).table;
    const bool fq = f.order() == 8 && !check_variety(f, "associative") && check_variety(f, "wip") &&
                    check_variety(f, "cc");
    if (!fq) note += "quotient ";
    ok = ok && fq;
    const auto series = upper_central_series(q_, opt_.cap);
    const auto cls = nilpotency_class(q_, opt_.cap);
    bool nil = cls && *cls == 3 && series.size() >= 3 && series[2].size() == 4;
    if (nil) nil = isomorphic(quotient(q_, series[2], opt_.cap).table, cyclic_group(4)).has_value();
    if (!nil) note += "nilpotency ";
    ok = ok && nil;
    const bool g = g_loop_report(q_).by_isotopes;
    if (!g) note += "g-loop ";
    ok = ok && g;
    const bool fourth = for_all_x([&](std::size_t x) {
      return power(L_[x], 4).is_identity() && power(R_[x], 4).is_identity();
    });
    note += fourth ? "L^4=R^4=id: yes" : "L^4=R^4=id: no";
    add("proper_osborn_16_profile", ok, note);
  } catch (const Capped&) {
    add("proper_osborn_16_profile", std::nullopt, "group cap exceeded");
  }
}

TheoremReport Verifier::run() {
  lc_family();
  extra_and_bol();
  nuclear_subloop();
  osborn_identities();
  osborn_structure();
  conjugacy_closed();
  g_loops();
  buchsteiner();
  two_of_three();
  cross_paths();
  proper_osborn_16();
  return std::move(report_);
}

}  // namespace

TheoremReport verify_theorems(const LoopTable& q, const VerifyOptions& options) {
  return Verifier(q, options).run();
}

std::vector<std::string> theorem_check_ids() {
  std::vector<std::string> ids;
  for (const CheckResult& c : verify_theorems(trivial_loop()).checks) ids.push_back(c.id);
  return ids;
}

std::string format_report(std::string_view loop_id, const TheoremReport& report) {
  std::string out;
  for (const CheckResult& c : report.checks) {
    out += loop_id;
    out += ' ';
    out += c.id;
    out += ' ';
    out += to_string(c.status);
    if (!c.note.empty()) {
      out += ' ';
      out += c.note;
    }
    out += '\n';
  }
  return out;
}

}  // namespace loops
