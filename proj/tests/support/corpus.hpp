#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "loops/loop_io.hpp"
#include "loops/loop_table.hpp"
#include "loops/search.hpp"
#include "loops/varieties.hpp"

namespace testing {

inline std::string data_path(const std::string& name) {
  return std::string(LOOPS_TEST_DATA_DIR) + "/" + name;
}

inline loops::LoopTable data_loop(const std::string& name) {
  return loops::read_loop_file(data_path(name));
}

// All loops of order n up to isomorphism, as canonical forms.
inline const std::vector<loops::LoopTable>& corpus(std::size_t n) {
  static std::map<std::size_t, std::vector<loops::LoopTable>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    loops::SearchSpec spec;
    spec.order = n;
    spec.mode = loops::SearchMode::Collect;
    spec.isomorphs = loops::IsomorphHandling::UpToIso;
    it = cache.emplace(n, loops::enumerate(spec).loops).first;
  }
  return it->second;
}

inline std::vector<loops::LoopTable> corpus_up_to(std::size_t n) {
  std::vector<loops::LoopTable> out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& q : corpus(k)) out.push_back(q);
  }
  return out;
}

// First nonassociative loop of order 5 in corpus order.
inline const loops::LoopTable& nonassociative_order5() {
  for (const auto& q : corpus(5)) {
    if (!loops::check_variety(q, "associative")) return q;
  }
  throw std::logic_error("no nonassociative loop of order 5");
}

}  // namespace testing
