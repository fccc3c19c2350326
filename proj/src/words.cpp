#include "wrep/words.hpp"

#include <sstream>

namespace wrep {

void GroupWord::check_n(int n) {
  if (n < 2) throw BadStrandCount("strand count must be at least 2");
}

void GroupWord::check_letter(const Generator& g) const {
  if (g.index < 1 || g.index > n_ - 1)
    throw IndexOutOfRange("generator index out of range for n=" + std::to_string(n_));
  if (g.power != 1 && g.power != -1) throw BadParams("generator power must be +1 or -1");
}

GroupWord::GroupWord(int n, std::vector<Generator> letters) : n_(n) {
  check_n(n);
  for (auto& g : letters) {
    if (g.kind == Generator::Alpha) g.power = 1;
    check_letter(g);
  }
  letters_ = std::move(letters);
  reduce();
}

GroupWord GroupWord::raw(int n, std::vector<Generator> letters) {
  GroupWord w(n);
  for (auto& g : letters) {
    if (g.kind == Generator::Alpha) g.power = 1;
    w.check_letter(g);
  }
  w.letters_ = std::move(letters);
  return w;
}

void GroupWord::reduce() {
  std::vector<Generator> out;
  out.reserve(letters_.size());
  for (const Generator& g : letters_) {
    if (!out.empty()) {
      const Generator& top = out.back();
      bool cancels = top.kind == g.kind && top.index == g.index &&
                     (g.kind == Generator::Alpha || top.power == -g.power);
      if (cancels) {
        out.pop_back();
        continue;
      }
    }
    out.push_back(g);
  }
  letters_ = std::move(out);
}

GroupWord GroupWord::concat(const GroupWord& other) const {
  if (n_ != other.n_) throw StrandMismatch("strand counts differ");
  std::vector<Generator> ls = letters_;
  ls.insert(ls.end(), other.letters_.begin(), other.letters_.end());
  return GroupWord(n_, std::move(ls));
}

GroupWord GroupWord::inverted() const {
  std::vector<Generator> ls;
  ls.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    Generator g = *it;
    if (g.kind == Generator::Sigma) g.power = -g.power;
    ls.push_back(g);
  }
  return GroupWord(n_, std::move(ls));
}

GroupWord GroupWord::commutator(const GroupWord& other) const {
  return concat(other).concat(inverted()).concat(other.inverted());
}

GroupWord GroupWord::power(int k) const {
  GroupWord base = k < 0 ? inverted() : *this;
  if (k < 0) k = -k;
  GroupWord acc(n_);
  for (int i = 0; i < k; ++i) acc = acc.concat(base);
  return acc;
}

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Generator& g : letters_) {
    if (!first) os << ' ';
    first = false;
    if (g.kind == Generator::Alpha)
      os << 'a' << g.index;
    else
      os << (g.power > 0 ? 's' : 'S') << g.index;
  }
  return os.str();
}

GroupWord theta(int n) {
  std::vector<Generator> ls;
  for (int i = 1; i <= n - 1; ++i) ls.push_back(sigma(i));
  return GroupWord(n, std::move(ls));
}

GroupWord sigma_zero(int n) {
  GroupWord th = theta(n);
  return th.concat(GroupWord(n, {sigma(n - 1)})).concat(th.inverted());
}

namespace {

std::string rel_id(int type, int i, int j = -1) {
  std::ostringstream os;
  os << "(" << type << ")@i=" << i;
  if (j >= 0) os << ",j=" << j;
  return os.str();
}

}  // namespace

std::vector<RelationPair> relators(int n) {
  if (n < 3) throw BadStrandCount("relators need n >= 3");
  std::vector<RelationPair> rels;
  GroupWord empty(n);
  for (int i = 1; i <= n - 1; ++i)
    rels.push_back({rel_id(1, i), GroupWord::raw(n, {alpha(i), alpha(i)}), empty});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      rels.push_back({rel_id(2, i, j), GroupWord(n, {alpha(i), alpha(j)}),
                      GroupWord(n, {alpha(j), alpha(i)})});
  for (int i = 1; i <= n - 2; ++i)
    rels.push_back({rel_id(3, i), GroupWord(n, {alpha(i), alpha(i + 1), alpha(i)}),
                    GroupWord(n, {alpha(i + 1), alpha(i), alpha(i + 1)})});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      rels.push_back({rel_id(4, i, j), GroupWord(n, {sigma(i), sigma(j)}),
                      GroupWord(n, {sigma(j), sigma(i)})});
  for (int i = 1; i <= n - 2; ++i)
    rels.push_back({rel_id(5, i), GroupWord(n, {sigma(i), sigma(i + 1), sigma(i)}),
                    GroupWord(n, {sigma(i + 1), sigma(i), sigma(i + 1)})});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      rels.push_back({rel_id(6, i, j), GroupWord(n, {alpha(i), sigma(j)}),
                      GroupWord(n, {sigma(j), alpha(i)})});
  for (int i = 1; i <= n - 2; ++i)
    rels.push_back({rel_id(7, i), GroupWord(n, {alpha(i), alpha(i + 1), sigma(i)}),
                    GroupWord(n, {sigma(i + 1), alpha(i), alpha(i + 1)})});
  for (int i = 1; i <= n - 2; ++i)
    rels.push_back({rel_id(8, i), GroupWord(n, {sigma(i), sigma(i + 1), alpha(i)}),
                    GroupWord(n, {alpha(i + 1), sigma(i), sigma(i + 1)})});
  return rels;
}

std::vector<RelationPair> derived_identities(int n) {
  if (n < 3) throw BadStrandCount("derived identities need n >= 3");
  std::vector<RelationPair> rels;
  GroupWord empty(n), th = theta(n), th_inv = th.inverted();
  for (int i = 1; i <= n - 2; ++i)
    rels.push_back({"(a)@i=" + std::to_string(i),
                    GroupWord(n, {sigma(i), alpha(i + 1), alpha(i)}),
                    GroupWord(n, {alpha(i + 1), alpha(i), sigma(i + 1)})});
  for (int i = 1; i <= n - 2; ++i)
    rels.push_back({"(b)@i=" + std::to_string(i), GroupWord(n, {sigma(i + 1)}),
                    th.concat(GroupWord(n, {sigma(i)})).concat(th_inv)});
  for (int i = 1; i <= n - 2; ++i)
    rels.push_back({"(c)@i=" + std::to_string(i), GroupWord(n, {alpha(i + 1)}),
                    th.concat(GroupWord(n, {alpha(i)})).concat(th_inv)});
  for (int i = 1; i <= n - 2; ++i)
    rels.push_back({"(d)@i=" + std::to_string(i),
                    GroupWord(n, {alpha(i), alpha(i + 1)}).power(3), empty});
  return rels;
}

std::vector<RelationPair> braid_only_relators(int n) {
  std::vector<RelationPair> out;
  for (auto& r : relators(n))
    if (r.id[1] == '4' || r.id[1] == '5') out.push_back(std::move(r));
  return out;
}

GroupWord parse_word(const std::string& text, int n) {
  std::vector<Generator> ls;
  std::istringstream in(text);
  std::string tok;
  std::size_t consumed = 0;
  while (in >> tok) {
    std::size_t pos = text.find(tok, consumed);
    consumed = pos + tok.size();
    if (tok[0] == '#') break;  // comment until end of line
    if (tok == "theta" || tok == "THETA") {
      bool inv = tok == "THETA";
      for (int i = 1; i <= n - 1; ++i) {
        int idx = inv ? n - i : i;
        ls.push_back(sigma(idx, inv ? -1 : 1));
      }
      continue;
    }
    char c = tok[0];
    if ((c != 's' && c != 'S' && c != 'a') || tok.size() < 2)
      throw WordSyntaxError("bad token '" + tok + "' at position " + std::to_string(pos));
    for (std::size_t k = 1; k < tok.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(tok[k])))
        throw WordSyntaxError("bad token '" + tok + "' at position " + std::to_string(pos));
    int idx = std::stoi(tok.substr(1));
    if (idx < 1 || idx > n - 1)
      throw IndexOutOfRange("index out of range in token '" + tok + "' at position " +
                            std::to_string(pos));
    if (c == 'a')
      ls.push_back(alpha(idx));
    else
      ls.push_back(sigma(idx, c == 's' ? 1 : -1));
  }
  return GroupWord(n, std::move(ls));
}

}  // namespace wrep
