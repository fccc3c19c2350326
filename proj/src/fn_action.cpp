#include "wrep/fn_action.hpp"

#include <sstream>

namespace wrep {

std::string FreeWord::to_string() const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, pow] : letters) {
    if (!first) os << ' ';
    first = false;
    os << 'x' << idx;
    if (pow < 0) os << "^-1";
  }
  return os.str();
}

FreeWord free_letter(int rank, int index, int power) {
  if (index < 1 || index > rank) throw IndexOutOfRange("free generator index out of range");
  FreeWord w{rank, {{index, power}}};
  return w;
}

FreeWord free_reduce(int rank, std::vector<std::pair<int, int>> letters) {
  std::vector<std::pair<int, int>> out;
  out.reserve(letters.size());
  for (const auto& l : letters) {
    if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
      out.pop_back();
    else
      out.push_back(l);
  }
  return FreeWord{rank, std::move(out)};
}

FreeWord free_concat(const FreeWord& a, const FreeWord& b) {
  if (a.rank != b.rank) throw StrandMismatch("free word ranks differ");
  std::vector<std::pair<int, int>> ls = a.letters;
  ls.insert(ls.end(), b.letters.begin(), b.letters.end());
  return free_reduce(a.rank, std::move(ls));
}

FreeWord free_invert(const FreeWord& a) {
  std::vector<std::pair<int, int>> ls;
  ls.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    ls.emplace_back(it->first, -it->second);
  return FreeWord{a.rank, std::move(ls)};
}

bool FreeAut::is_identity() const {
  for (int i = 0; i < rank; ++i) {
    const FreeWord& w = images[static_cast<std::size_t>(i)];
    if (w.letters.size() != 1 || w.letters[0] != std::make_pair(i + 1, 1)) return false;
  }
  return true;
}

std::string FreeAut::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rank; ++i) {
    if (i) os << '\n';
    os << 'x' << (i + 1) << " -> " << images[static_cast<std::size_t>(i)].to_string();
  }
  return os.str();
}

FreeAut identity_aut(int rank) {
  FreeAut aut{rank, {}};
  for (int i = 1; i <= rank; ++i) aut.images.push_back(free_letter(rank, i));
  return aut;
}

FreeAut generator_aut(const Generator& g, int n) {
  if (g.index < 1 || g.index > n - 1) throw IndexOutOfRange("generator index out of range");
  FreeAut aut = identity_aut(n);
  int i = g.index;
  if (g.kind == Generator::Alpha) {
    aut.images[i - 1] = free_letter(n, i + 1);
    aut.images[i] = free_letter(n, i);
  } else if (g.power > 0) {
    aut.images[i - 1] = free_letter(n, i + 1);
    aut.images[i] = free_reduce(n, {{i + 1, -1}, {i, 1}, {i + 1, 1}});
  } else {
    aut.images[i - 1] = free_reduce(n, {{i, 1}, {i + 1, 1}, {i, -1}});
    aut.images[i] = free_letter(n, i);
  }
  return aut;
}

FreeWord apply_aut(const FreeAut& aut, const FreeWord& w, std::size_t max_letters) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [idx, pow] : w.letters) {
    const FreeWord& img = aut.images[static_cast<std::size_t>(idx - 1)];
    if (pow > 0) {
      out.insert(out.end(), img.letters.begin(), img.letters.end());
    } else {
      for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it)
        out.emplace_back(it->first, -it->second);
    }
    if (out.size() > max_letters)
      throw WordLengthLimit("free word image exceeds the letter limit");
  }
  return free_reduce(w.rank, std::move(out));
}

FreeAut compose(const FreeAut& first, const FreeAut& then, std::size_t max_letters) {
  if (first.rank != then.rank) throw StrandMismatch("automorphism ranks differ");
  FreeAut out{first.rank, {}};
  std::size_t total = 0;
  for (const FreeWord& img : first.images) {
    out.images.push_back(apply_aut(then, img, max_letters));
    total += out.images.back().letters.size();
    if (total > max_letters)
      throw WordLengthLimit("automorphism image size exceeds the letter limit");
  }
  return out;
}

FreeAut word_to_aut(const GroupWord& w, std::size_t max_letters) {
  FreeAut acc = identity_aut(w.strands());
  for (const Generator& g : w.letters())
    acc = compose(acc, generator_aut(g, w.strands()), max_letters);
  return acc;
}

bool words_equal_in_wbn(const GroupWord& w1, const GroupWord& w2, std::size_t max_letters) {
  if (w1.strands() != w2.strands()) throw StrandMismatch("strand counts differ");
  return word_to_aut(w1, max_letters) == word_to_aut(w2, max_letters);
}

bool is_conjugating_aut(const FreeAut& aut, std::vector<int>* permutation) {
  std::vector<int> perm(static_cast<std::size_t>(aut.rank), 0);
  std::vector<char> hit(static_cast<std::size_t>(aut.rank) + 1, 0);
  for (int i = 0; i < aut.rank; ++i) {
    const auto& ls = aut.images[static_cast<std::size_t>(i)].letters;
    if (ls.size() % 2 == 0) return false;
    std::size_t m = ls.size() / 2;
    if (ls[m].second != 1) return false;
    for (std::size_t j = 0; j < m; ++j) {
      if (ls[j].first != ls[ls.size() - 1 - j].first ||
          ls[j].second != -ls[ls.size() - 1 - j].second)
        return false;
    }
    int target = ls[m].first;
    if (hit[static_cast<std::size_t>(target)]) return false;
    hit[static_cast<std::size_t>(target)] = 1;
    perm[static_cast<std::size_t>(i)] = target;
  }
  if (permutation) *permutation = std::move(perm);
  return true;
}

}  // namespace wrep
