#include <algorithm>
#include <cctype>
#include <map>

#include "loops/error.hpp"
#include "loops/varieties.hpp"

namespace loops {

namespace {

struct Row {
  const char* id;
  std::vector<std::string> aliases;
  const char* description;
  std::vector<const char*> identities;
  std::vector<std::string> conjuncts;
  bool standard_form = false;
};

// Products are written explicitly; x^l = 1/x and x^r = x\1.
std::vector<Row> rows() {
  return {
      {"associative", {"assoc", "group"}, "x(yz) = (xy)z", {"x*(y*z) = (x*y)*z"}, {}},
      {"commutative", {"comm"}, "xy = yx", {"x*y = y*x"}, {}},
      {"lip", {}, "left inverse property", {"x^l*(x*y) = y"}, {}},
      {"rip", {}, "right inverse property", {"(y*x)*x^r = y"}, {}},
      {"ip", {}, "inverse property: LIP and RIP", {}, {"lip", "rip"}},
      {"lap", {}, "left alternative property", {"x*(x*y) = (x*x)*y"}, {}},
      {"rap", {}, "right alternative property", {"(y*x)*x = y*(x*x)"}, {}},
      {"ap", {}, "alternative property: LAP and RAP", {}, {"lap", "rap"}},
      {"flx", {"flexible"}, "flexible law", {"(x*y)*x = x*(y*x)"}, {}},
      {"lc", {}, "left central (LC) loop", {"x*(x*(y*z)) = (x*(x*y))*z"}, {}},
      {"rc", {}, "right central (RC) loop", {"((z*y)*x)*x = z*((y*x)*x)"}, {}},
      {"c", {"c-loop"}, "C loop", {"((y*x)*x)*z = y*(x*(x*z))"}, {}},
      {"moufang", {}, "Moufang loop", {"(x*y)*(z*x) = x*((y*z)*x)"}, {}},
      {"nuclear_squares",
       {"nsq"},
       "every square lies in the nucleus",
       {"(x*x)*(y*z) = ((x*x)*y)*z", "y*((x*x)*z) = (y*(x*x))*z",
        "y*(z*(x*x)) = (y*z)*(x*x)"},
       {}},
      {"extra", {}, "extra loop: Moufang with nuclear squares", {}, {"moufang", "nuclear_squares"}},
      {"lbol", {"left_bol"}, "left Bol loop", {"x*(y*(x*z)) = (x*(y*x))*z"}, {}, true},
      {"rbol", {"right_bol"}, "right Bol loop", {"((z*x)*y)*x = z*((x*y)*x)"}, {}, true},
      {"lcc",
       {},
       "left conjugacy closed: T_x is a right pseudoautomorphism with companion x",
       {"x*(y*z) = ((x*y)/x)*(x*z)"},
       {}},
      {"rcc",
       {},
       "right conjugacy closed: T_x^-1 is a left pseudoautomorphism with companion x",
       {"(z*y)*x = (z*x)*(x\\(y*x))"},
       {}},
      {"cc", {"conjugacy_closed"}, "conjugacy closed: LCC and RCC", {}, {"lcc", "rcc"}},
      {"buchsteiner", {"buch"}, "Buchsteiner loop", {"x\\((x*y)*z) = (y*(z*x))/x"}, {}},
      {"osborn1", {}, "Osborn identity 1", {"((x*(y*x))/x)*(z*x) = x*((y*z)*x)"}, {}},
      {"osborn2", {}, "Osborn identity 2", {"(x*((y*x^l)*x))*(z*x) = x*((y*z)*x)"}, {}},
      {"osborn3", {}, "Osborn identity 3", {"(x^l\\y)*(z*x) = x*((y*z)*x)"}, {}},
      {"osborn4", {}, "Osborn identity 4", {"(x*y)*(x\\((x*z)*x)) = (x*(y*z))*x"}, {}},
      {"osborn5", {}, "Osborn identity 5", {"(x*y)*((x*(x^r*z))*x) = (x*(y*z))*x"}, {}},
      {"osborn6", {}, "Osborn identity 6", {"(x*y)*(z/x^r) = (x*(y*z))*x"}, {}},
      {"osborn7", {}, "Osborn identity 7", {"x^l\\((x^l*y)*z) = (y*(z*x))/x"}, {}},
      {"osborn8", {}, "Osborn identity 8", {"x\\((x*y)*z) = (y*(z*x^r))/x^r"}, {}},
      {"osborn", {}, "Osborn loop (identity 1)", {}, {"osborn1"}},
      {"wip", {}, "weak inverse property", {"x*(y*x)^r = y^r"}, {}},
      {"aaip",
       {},
       "antiautomorphic inverse property",
       {"x^l = x^r", "(x*y)^r = y^r*x^r"},
       {}},
      {"cip", {}, "crossed inverse property", {"(x*y)*x^r = y"}, {}},
      {"vd",
       {"vd_loop"},
       "VD-loop: T_x left and T_x^-1 right pseudoautomorphisms with companion x",
       {"(x*((x*y)/x))*((x*z)/x) = x*((x*(y*z))/x)",
        "(x\\(y*x))*((x\\(z*x))*x) = (x\\((y*z)*x))*x"},
       {}},
      {"gen_moufang",
       {"generalized_moufang", "gm"},
       "generalized Moufang loop",
       {"x*((y*z)*x) = ((y^l*x^l)^r)*(z*x)"},
       {}},
      {"left_a",
       {"la", "left_automorphic"},
       "left A-loop: L_{xy}^-1 L_x L_y are automorphisms",
       {"(x*y)\\(x*(y*(z*u))) = ((x*y)\\(x*(y*z)))*((x*y)\\(x*(y*u)))"},
       {}},
      {"right_a",
       {"ra", "right_automorphic"},
       "right A-loop: R_{yx}^-1 R_x R_y are automorphisms",
       {"(((z*u)*y)*x)/(y*x) = (((z*y)*x)/(y*x))*(((u*y)*x)/(y*x))"},
       {}},
      {"jaiyeola", {}, "(x.xy)(x^l.xz) = x(x.yz)", {"(x*(x*y))*(x^l*(x*z)) = x*(x*(y*z))"}, {}},
  };
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<VarietyCatalogEntry> build_catalog() {
  std::vector<VarietyCatalogEntry> entries;
  for (auto& row : rows()) {
    VarietyCatalogEntry e;
    e.id = row.id;
    e.aliases = row.aliases;
    e.description = row.description;
    for (const char* text : row.identities) e.identities.push_back(parse_identity(text));
    e.conjuncts = row.conjuncts;
    e.standard_form = row.standard_form;
    entries.push_back(std::move(e));
  }
  // Conjuncts always refer to earlier rows, so one forward pass suffices.
  std::map<std::string, std::size_t> arity;
  for (auto& e : entries) {
    std::size_t a = 0;
    for (const auto& id : e.identities) a = std::max(a, id.arity());
    for (const auto& c : e.conjuncts) a = std::max(a, arity.at(c));
    e.arity = a;
    arity[e.id] = a;
  }
  return entries;
}

void collect(const VarietyCatalogEntry& e, std::vector<const Identity*>& out) {
  for (const auto& c : e.conjuncts) collect(find_variety(c), out);
  for (const auto& id : e.identities) {
    if (std::find(out.begin(), out.end(), &id) == out.end()) out.push_back(&id);
  }
}

}  // namespace

const std::vector<VarietyCatalogEntry>& catalog() {
  static const std::vector<VarietyCatalogEntry> entries = build_catalog();
  return entries;
}

const VarietyCatalogEntry& find_variety(std::string_view id) {
  const std::string key = lower(id);
  for (const auto& e : catalog()) {
    if (e.id == key) return e;
    for (const auto& alias : e.aliases) {
      if (alias == key) return e;
    }
  }
  throw LoopError(ErrorKind::UnknownVariety, "unknown variety '" + std::string(id) + "'");
}

std::vector<const Identity*> required_identities(std::string_view id) {
  std::vector<const Identity*> out;
  collect(find_variety(id), out);
  return out;
}

std::optional<VarietyViolation> find_variety_violation(const LoopTable& q,
                                                       std::string_view id) {
  for (const Identity* identity : required_identities(id)) {
    if (auto bad = find_violation(*identity, q)) return VarietyViolation{identity, *bad};
  }
  return std::nullopt;
}

bool check_variety(const LoopTable& q, std::string_view id) {
  return !find_variety_violation(q, id).has_value();
}

}  // namespace loops
