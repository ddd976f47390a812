#include "evarlab/links/word.hpp"

namespace evarlab::links {

Word free_reduce(Word w) {
  Word out;
  for (const auto& [g, e] : w) {
    if (e == 0) continue;
    if (!out.empty() && out.back().first == g) {
      out.back().second += e;
      if (out.back().second == 0) out.pop_back();
    } else {
      out.push_back({g, e});
    }
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  while (w.size() >= 2 && w.front().first == w.back().first) {
    int g = w.front().first;
    int e = w.front().second + w.back().second;
    w.erase(w.begin());
    w.pop_back();
    if (e != 0) {
      w.insert(w.begin(), {g, e});
      w = free_reduce(std::move(w));
      break;  // merged ends into one letter; nothing more to trim
    }
    w = free_reduce(std::move(w));
  }
  return w;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->first, -it->second});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(std::move(out));
}

Word substitute(const Word& w, int gen, const Word& replacement) {
  Word inv = inverse(replacement);
  Word out;
  for (const auto& [g, e] : w) {
    if (g != gen) {
      out.push_back({g, e});
      continue;
    }
    const Word& block = e > 0 ? replacement : inv;
    int times = e > 0 ? e : -e;
    for (int k = 0; k < times; ++k)
      out.insert(out.end(), block.begin(), block.end());
  }
  return free_reduce(std::move(out));
}

std::vector<std::int64_t> exponent_sums(const Word& w, std::size_t ngens) {
  std::vector<std::int64_t> sums(ngens, 0);
  for (const auto& [g, e] : w) sums.at(static_cast<std::size_t>(g)) += e;
  return sums;
}

std::string word_to_string(const Word& w,
                           const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& [g, e] : w) {
    if (!out.empty()) out += "*";
    out += names.at(static_cast<std::size_t>(g));
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace evarlab::links
