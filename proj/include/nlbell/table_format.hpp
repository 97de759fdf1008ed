#pragma once

#include <string>
#include <vector>

#include "nlbell/behavior.hpp"
#include "nlbell/functional.hpp"
#include "nlbell/polytope.hpp"

namespace nlbell::io {

/// Alice's marginals across the top, Bob's down the left, joint entries
/// P(A_i B_j) in row j, column i.
std::string render_table(const BellFunctional& f);
std::string render_table(const BehaviorPoint& p);
std::string render_table(const FloatBehavior& p);

std::string render_census(const std::vector<ClassCensus>& census);

}  // namespace nlbell::io
