#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pyramid/dominators.hpp"

namespace pyramid::detail {

struct Context {
  DominationStats* stats = nullptr;
  std::map<std::string, Certificate> memo;
  int depth = 0;

  void count(const std::string& step) {
    if (stats) ++stats->steps[step];
  }
};

Certificate dominate_rec(Context& ctx, const Instance& inst, const Routing& rt);
Certificate dominate_ladder_rec(Context& ctx, const Instance& inst, const Routing& rt);

// Sum of weight * certificate, merged and normalized.
Certificate mix(const std::vector<std::pair<Rational, Certificate>>& parts);

Certificate single(const Routing& tree);

}  // namespace pyramid::detail
