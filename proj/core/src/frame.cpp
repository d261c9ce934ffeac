#include "geocheck/frame.hpp"

#include "geocheck/error.hpp"

#include <sstream>

namespace geocheck::frame {

std::vector<Letter> reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& x : letters) {
    if (x.generator < 1 || (x.sign != 1 && x.sign != -1)) {
      throw Error(ErrorKind::kInvalidArgument, "letters need a positive generator and sign ±1");
    }
    if (!out.empty() && out.back() == x.inverse()) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

ReducedWord::ReducedWord(std::span<const Letter> letters) : letters_(reduce(letters)) {}

ReducedWord ReducedWord::inverse() const {
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (auto& x : inv) x = x.inverse();
  ReducedWord w;
  w.letters_ = std::move(inv);
  return w;
}

ReducedWord ReducedWord::operator*(const ReducedWord& rhs) const {
  std::vector<Letter> joined = letters_;
  joined.insert(joined.end(), rhs.letters_.begin(), rhs.letters_.end());
  return ReducedWord(joined);
}

std::string ReducedWord::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const Letter& x : letters_) {
    if (!out.empty()) out += ' ';
    if (x.generator <= 26) {
      out += static_cast<char>('A' + x.generator - 1);
    } else {
      out += "x" + std::to_string(x.generator);
    }
    if (x.sign < 0) out += '\'';
  }
  return out;
}

ReducedWord parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    int sign = 1;
    if (tok.back() == '\'') {
      sign = -1;
      tok.pop_back();
    }
    int g = 0;
    if (tok.size() == 1 && tok[0] >= 'A' && tok[0] <= 'Z') {
      g = tok[0] - 'A' + 1;
    } else if (tok.size() > 1 && tok[0] == 'x' && tok.find_first_not_of("0123456789", 1) == std::string::npos) {
      g = std::stoi(tok.substr(1));
    }
    if (g < 1) throw Error(ErrorKind::kParse, "bad generator token '" + tok + "'");
    letters.push_back({g, sign});
  }
  return ReducedWord(letters);
}

ReducedWord commutator(const ReducedWord& u, const ReducedWord& v) {
  return u * v * u.inverse() * v.inverse();
}

namespace {

ReducedWord balanced(int lo, int hi) {  // generators lo..hi inclusive
  if (lo == hi) return ReducedWord::generator(lo);
  const int mid = lo + (hi - lo + 1) / 2;  // left half gets the extra nail
  return commutator(balanced(lo, mid - 1), balanced(mid, hi));
}

}  // namespace

ReducedWord nail_word(int n, NailScheme scheme) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "need at least one nail");
  if (scheme == NailScheme::kBalanced) return balanced(1, n);
  ReducedWord w = ReducedWord::generator(1);
  for (int g = 2; g <= n; ++g) w = commutator(w, ReducedWord::generator(g));
  return w;
}

ReducedWord drop_nail(const ReducedWord& word, int nail) {
  std::vector<Letter> kept;
  for (const Letter& x : word.letters()) {
    if (x.generator != nail) kept.push_back(x);
  }
  return ReducedWord(kept);
}

}  // namespace geocheck::frame
