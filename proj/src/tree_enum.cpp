#include "cmaps/tree_enum.hpp"

#include <algorithm>
#include <string>

namespace cmaps {

namespace {

struct Search {
  const ExpandRule& expand;
  const PruneRule& prune;
  const EnumLimits& limits;
  const std::function<void(const PlaneTree&)>& visit;
  std::uint64_t steps = 0;
  std::uint64_t found = 0;

  void run(const PlaneTree& t, int next) {
    if (++steps > limits.max_steps) throw BudgetExceeded("tree enumeration step budget exceeded");
    if (next == t.size()) {
      ++found;
      visit(t);
      return;
    }
    std::vector<ChildList> options;
    expand(t, next, options);
    for (const ChildList& kids : options) {
      if (t.size() + static_cast<int>(kids.size()) > limits.max_nodes) continue;
      PlaneTree u = t;
      for (const ChildSpec& c : kids) {
        const int id = u.add_child(next, c.color);
        u.node(id).mark = c.mark;
      }
      if (prune && prune(u)) continue;
      run(u, next + 1);
    }
  }
};

void words_rec(int length, const std::vector<ChildSpec>& alphabet, const std::function<bool(const std::vector<int>&)>& accept,
               ChildList& cur, std::vector<int>& counts, std::vector<ChildList>& out) {
  if (static_cast<int>(cur.size()) == length) {
    if (accept(counts)) out.push_back(cur);
    return;
  }
  for (std::size_t k = 0; k < alphabet.size(); ++k) {
    cur.push_back(alphabet[k]);
    ++counts[k];
    words_rec(length, alphabet, accept, cur, counts, out);
    --counts[k];
    cur.pop_back();
  }
}

}  // namespace

std::uint64_t enumerate_trees(const PlaneTree& seed, const ExpandRule& expand, const PruneRule& prune,
                              const EnumLimits& limits, const std::function<void(const PlaneTree&)>& visit) {
  Search s{expand, prune, limits, visit};
  if (!(prune && prune(seed))) s.run(seed, 0);
  return s.found;
}

std::vector<ChildList> words(int length, const std::vector<ChildSpec>& alphabet,
                             const std::function<bool(const std::vector<int>&)>& accept) {
  std::vector<ChildList> out;
  ChildList cur;
  std::vector<int> counts(alphabet.size(), 0);
  words_rec(length, alphabet, accept, cur, counts, out);
  return out;
}

std::string Profile::str() const {
  std::string s = "whites=" + std::to_string(whites) + " blacks={";
  for (std::size_t k = 0; k < degrees.size(); ++k) s += (k ? "," : "") + std::to_string(degrees[k]);
  return s + "}";
}

Profile profile_of(const PlaneTree& t, bool skip_marked_whites) {
  Profile pr;
  for (int v = 0; v < t.size(); ++v) {
    const TreeNode& n = t.node(v);
    if (n.color == Color::White && !(skip_marked_whites && n.mark != 0)) ++pr.whites;
    if (n.color == Color::Black && n.mark == 0) pr.degrees.push_back(t.degree(v));
  }
  std::sort(pr.degrees.begin(), pr.degrees.end());
  return pr;
}

}  // namespace cmaps
