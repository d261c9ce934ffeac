#pragma once

#include "geocheck/rational.hpp"

#include <string>
#include <vector>

namespace geocheck::discrete {

/// Equally likely, independent child types. `boy_types` lists indices into
/// `types`; `distinguished` is one of them (e.g. a boy born on Friday).
struct ChildTypeSpace {
  std::vector<std::string> types;
  std::vector<std::size_t> boy_types;
  std::size_t distinguished = 0;

  /// Throws Error(kInvalidArgument) when the invariants do not hold.
  void validate() const;
  bool is_boy(std::size_t type) const;
};

enum class FamilyCondition {
  kAtLeastOneDistinguished,
  kFirstChildBoy,
};

/// {B, G}; distinguished = B.
ChildTypeSpace sex_space();
/// Sex × weekday (14 types); distinguished = boy born on Friday.
ChildTypeSpace weekday_space();
/// Sex × weekday × hour (336 types); distinguished = boy born on Friday, 18:00-19:00.
ChildTypeSpace hour_space();

/// P(both children are boys | condition), by enumerating all ordered pairs.
/// Throws Error(kUndefinedConditional) if no pair satisfies the condition.
Rational family_probability(const ChildTypeSpace& space, FamilyCondition condition);

}  // namespace geocheck::discrete
