#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace geocheck::frame {

/// A generator (1-based nail index) raised to ±1.
struct Letter {
  int generator = 1;
  int sign = 1;

  Letter inverse() const { return {generator, -sign}; }
  auto operator<=>(const Letter&) const = default;
};

/// Element of the free group on the nails, always stored freely reduced.
class ReducedWord {
 public:
  ReducedWord() = default;
  /// Reduces the given letters.
  explicit ReducedWord(std::span<const Letter> letters);
  static ReducedWord generator(int g) { return ReducedWord(std::vector<Letter>{{g, 1}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  ReducedWord inverse() const;
  ReducedWord operator*(const ReducedWord& rhs) const;
  bool operator==(const ReducedWord&) const = default;

  /// "A B A' B'"; generators past Z print as "x27". Identity prints as "1".
  std::string str() const;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction by cancelling adjacent inverse pairs.
std::vector<Letter> reduce(std::span<const Letter> letters);

/// Parses the str() grammar: whitespace-separated generators with optional
/// trailing ' for inverses; "1" or empty text is the identity.
ReducedWord parse_word(std::string_view text);

/// [u, v] = u v u⁻¹ v⁻¹.
ReducedWord commutator(const ReducedWord& u, const ReducedWord& v);

enum class NailScheme { kLeftNested, kBalanced };

/// Rope word for n nails: [[…[g1,g2],g3]…,gn] or the balanced binary pairing.
ReducedWord nail_word(int n, NailScheme scheme);

/// Removes every occurrence of generator `nail` and reduces.
ReducedWord drop_nail(const ReducedWord& word, int nail);

}  // namespace geocheck::frame
