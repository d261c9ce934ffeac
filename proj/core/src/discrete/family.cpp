#include "geocheck/discrete/family.hpp"

#include "geocheck/error.hpp"

#include <algorithm>
#include <array>

namespace geocheck::discrete {

void ChildTypeSpace::validate() const {
  if (types.empty()) throw Error(ErrorKind::kInvalidArgument, "child type space is empty");
  for (std::size_t b : boy_types) {
    if (b >= types.size()) throw Error(ErrorKind::kInvalidArgument, "boy type index out of range");
  }
  if (!is_boy(distinguished)) {
    throw Error(ErrorKind::kInvalidArgument, "distinguished type must be a boy type");
  }
}

bool ChildTypeSpace::is_boy(std::size_t type) const {
  return std::find(boy_types.begin(), boy_types.end(), type) != boy_types.end();
}

namespace {

constexpr std::array<const char*, 7> kDays = {"Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"};
constexpr std::size_t kFriday = 4;

}  // namespace

ChildTypeSpace sex_space() {
  ChildTypeSpace s;
  s.types = {"B", "G"};
  s.boy_types = {0};
  s.distinguished = 0;
  return s;
}

ChildTypeSpace weekday_space() {
  ChildTypeSpace s;
  for (const char* sex : {"B", "G"}) {
    for (const char* day : kDays) s.types.push_back(std::string(sex) + "_" + day);
  }
  for (std::size_t d = 0; d < kDays.size(); ++d) s.boy_types.push_back(d);
  s.distinguished = kFriday;
  return s;
}

ChildTypeSpace hour_space() {
  ChildTypeSpace s;
  for (const char* sex : {"B", "G"}) {
    for (const char* day : kDays) {
      for (int h = 0; h < 24; ++h) s.types.push_back(std::string(sex) + "_" + day + "_" + std::to_string(h));
    }
  }
  for (std::size_t i = 0; i < 7 * 24; ++i) s.boy_types.push_back(i);
  s.distinguished = kFriday * 24 + 18;
  return s;
}

Rational family_probability(const ChildTypeSpace& space, FamilyCondition condition) {
  space.validate();
  const std::size_t n = space.types.size();
  std::vector<bool> boy(n, false);
  for (std::size_t b : space.boy_types) boy[b] = true;

  BigInt admissible = 0;
  BigInt both_boys = 0;
  for (std::size_t first = 0; first < n; ++first) {
    for (std::size_t second = 0; second < n; ++second) {
      bool ok = false;
      switch (condition) {
        case FamilyCondition::kAtLeastOneDistinguished:
          ok = first == space.distinguished || second == space.distinguished;
          break;
        case FamilyCondition::kFirstChildBoy:
          ok = boy[first];
          break;
      }
      if (!ok) continue;
      ++admissible;
      if (boy[first] && boy[second]) ++both_boys;
    }
  }
  if (admissible == 0) throw Error(ErrorKind::kUndefinedConditional, "no pair satisfies the condition");
  return Rational(both_boys, admissible);
}

}  // namespace geocheck::discrete
