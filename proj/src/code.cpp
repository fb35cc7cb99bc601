#include "fewdist/code.hpp"

#include <bit>
#include <sstream>
#include <unordered_set>

namespace fewdist {

int popcount(Word w) { return std::popcount(w); }

Code::Code(int n, std::vector<Word> words) : n_(n), words_(std::move(words)) {
  if (n_ < 1 || n_ > 64) throw InvalidArgument("code length must lie in [1, 64]");
  const Word mask = n_ == 64 ? ~Word{0} : ((Word{1} << n_) - 1);
  std::unordered_set<Word> seen;
  for (Word w : words_) {
    if (w & ~mask) throw InvalidArgument("word longer than the code length");
    if (!seen.insert(w).second) throw InvalidArgument("duplicate codeword");
  }
}

Code Code::parse(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return from_strings(lines);
}

Code Code::from_strings(const std::vector<std::string>& lines) {
  if (lines.empty()) throw InvalidArgument("empty code");
  const std::size_t n = lines.front().size();
  std::vector<Word> words;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string& s = lines[li];
    if (s.size() != n)
      throw InvalidArgument("line " + std::to_string(li + 1) + " has length " + std::to_string(s.size()) +
                            ", expected " + std::to_string(n));
    Word w = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (s[c] == '1') w |= Word{1} << c;
      else if (s[c] != '0') throw InvalidArgument("line " + std::to_string(li + 1) + " is not a 0/1 string");
    }
    words.push_back(w);
  }
  return Code(static_cast<int>(n), std::move(words));
}

std::optional<int> Code::constant_weight() const {
  if (words_.empty()) return std::nullopt;
  const int w = popcount(words_.front());
  for (Word x : words_)
    if (popcount(x) != w) return std::nullopt;
  return w;
}

std::set<int> Code::distance_set(bool johnson) const {
  std::set<int> d;
  for (std::size_t a = 0; a < words_.size(); ++a)
    for (std::size_t b = a + 1; b < words_.size(); ++b) {
      int h = popcount(words_[a] ^ words_[b]);
      d.insert(johnson ? h / 2 : h);
    }
  return d;
}

bool Code::fits(const SpaceSpec& space) const {
  if (space.n() != n_) return false;
  if (space.is_hamming()) return true;
  auto w = constant_weight();
  return w && *w == space.w();
}

std::string Code::word_string(std::size_t i) const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int c = 0; c < n_; ++c)
    if ((words_[i] >> c) & 1) s[static_cast<std::size_t>(c)] = '1';
  return s;
}

std::string Code::to_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < words_.size(); ++i) os << word_string(i) << '\n';
  return os.str();
}

}  // namespace fewdist
