#include "cmaps/plane_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmaps {

const char* color_name(Color c) {
  switch (c) {
    case Color::White: return "white";
    case Color::Black: return "black";
    case Color::Dark: return "dark";
    case Color::Bud: return "bud";
  }
  return "?";
}

Color parse_color(const std::string& name) {
  if (name == "white") return Color::White;
  if (name == "black") return Color::Black;
  if (name == "dark") return Color::Dark;
  if (name == "bud") return Color::Bud;
  throw std::invalid_argument("unknown node colour: " + name);
}

PlaneTree::PlaneTree(Color root_color) { nodes_.push_back(TreeNode{root_color, -1, {}, 0, 0}); }

int PlaneTree::add_child(int parent, Color color, int weight) {
  if (parent < 0 || parent >= size()) throw std::out_of_range("add_child: bad parent");
  const int id = size();
  nodes_.push_back(TreeNode{color, parent, {}, weight, 0});
  nodes_[static_cast<std::size_t>(parent)].children.push_back(id);
  return id;
}

std::vector<int> PlaneTree::rotation(int v) const {
  const TreeNode& n = node(v);
  std::vector<int> rot;
  rot.reserve(n.children.size() + 1);
  if (n.parent >= 0) rot.push_back(n.parent);
  rot.insert(rot.end(), n.children.begin(), n.children.end());
  return rot;
}

int PlaneTree::degree(int v) const {
  const TreeNode& n = node(v);
  return static_cast<int>(n.children.size()) + (n.parent >= 0 ? 1 : 0);
}

int PlaneTree::count(Color c) const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [c](const TreeNode& n) { return n.color == c; }));
}

void PlaneTree::encode_into(int v, std::string& out) const {
  const TreeNode& n = node(v);
  static constexpr char letters[] = {'W', 'B', 'D', 'u'};
  out += letters[static_cast<int>(n.color)];
  if (n.mark != 0) out += '#' + std::to_string(n.mark);
  if (n.weight != 0) out += ':' + std::to_string(n.weight);
  if (n.children.empty()) return;
  out += '(';
  for (int c : n.children) encode_into(c, out);
  out += ')';
}

std::string PlaneTree::encode() const {
  std::string out;
  if (!empty()) encode_into(0, out);
  return out;
}

nlohmann::json PlaneTree::node_json(int v) const {
  const TreeNode& n = node(v);
  nlohmann::json kids = nlohmann::json::array();
  for (int c : n.children) kids.push_back(node_json(c));
  nlohmann::json j = {{"color", color_name(n.color)}, {"bud", n.color == Color::Bud}, {"children", kids}};
  if (n.mark != 0) j["mark"] = n.mark;
  if (n.weight != 0) j["weight"] = n.weight;
  return j;
}

nlohmann::json PlaneTree::to_json() const {
  if (empty()) return nullptr;
  return node_json(0);
}

PlaneTree PlaneTree::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("tree JSON must be an object");
  auto read_color = [](const nlohmann::json& n) {
    if (n.value("bud", false)) return Color::Bud;
    return parse_color(n.at("color").get<std::string>());
  };
  PlaneTree t(read_color(j));
  t.node(0).mark = j.value("mark", 0);
  // explicit stack: (json node, tree id)
  std::vector<std::pair<const nlohmann::json*, int>> stack{{&j, 0}};
  while (!stack.empty()) {
    auto [jn, id] = stack.back();
    stack.pop_back();
    std::vector<std::pair<const nlohmann::json*, int>> added;
    if (jn->contains("children")) {
      for (const auto& c : jn->at("children")) {
        if (!c.is_object()) throw std::invalid_argument("tree JSON child must be an object");
        const int cid = t.add_child(id, read_color(c), c.value("weight", 0));
        t.node(cid).mark = c.value("mark", 0);
        added.emplace_back(&c, cid);
      }
    }
    // ids follow creation order, which is not preorder; re-rooting below fixes that
    for (auto it = added.rbegin(); it != added.rend(); ++it) stack.push_back(*it);
  }
  if (t.node(0).color == Color::Bud && t.size() > 1) throw std::invalid_argument("bud with children");
  // normalise ids to preorder so encode() and node ids agree across sources
  return reroot(t, 0, 0);
}

int RotationSystem::add_node(Color c, int m) {
  color.push_back(c);
  mark.push_back(m);
  adj.emplace_back();
  return size() - 1;
}

RotationSystem to_rotation_system(const PlaneTree& t) {
  RotationSystem rs;
  for (int v = 0; v < t.size(); ++v) rs.add_node(t.node(v).color, t.node(v).mark);
  for (int v = 0; v < t.size(); ++v) rs.adj[static_cast<std::size_t>(v)] = t.rotation(v);
  return rs;
}

PlaneTree root_at(const RotationSystem& rs, int root, int start, std::vector<int>* old_to_new) {
  if (root < 0 || root >= rs.size()) throw std::out_of_range("root_at: bad root");
  const auto& radj = rs.adj[static_cast<std::size_t>(root)];
  if (!radj.empty() && (start < 0 || start >= static_cast<int>(radj.size())))
    throw std::out_of_range("root_at: bad start index");
  std::vector<int> ids(static_cast<std::size_t>(rs.size()), -1);
  PlaneTree t(rs.color[static_cast<std::size_t>(root)]);
  t.node(0).mark = rs.mark[static_cast<std::size_t>(root)];
  ids[static_cast<std::size_t>(root)] = 0;

  struct Frame {
    int old;
    int parent_old;
    std::size_t next;  // next offset into the rotation after the parent
  };
  std::vector<Frame> stack{{root, -1, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& a = rs.adj[static_cast<std::size_t>(f.old)];
    std::size_t offset = 0;
    std::size_t count = a.size();
    if (f.parent_old < 0) {
      offset = a.empty() ? 0 : static_cast<std::size_t>(start);
    } else {
      auto it = std::find(a.begin(), a.end(), f.parent_old);
      if (it == a.end()) throw std::invalid_argument("rotation system is not symmetric");
      offset = static_cast<std::size_t>(it - a.begin()) + 1;
      count = a.size() - 1;
    }
    if (f.next >= count) {
      stack.pop_back();
      continue;
    }
    const int child = a[(offset + f.next) % a.size()];
    ++f.next;
    if (ids[static_cast<std::size_t>(child)] != -1) throw std::invalid_argument("rotation system has a cycle");
    const int parent_new = ids[static_cast<std::size_t>(f.old)];
    const int cid = t.add_child(parent_new, rs.color[static_cast<std::size_t>(child)]);
    t.node(cid).mark = rs.mark[static_cast<std::size_t>(child)];
    ids[static_cast<std::size_t>(child)] = cid;
    const int old = f.old;  // f may dangle after push_back
    stack.push_back({child, old, 0});
  }
  if (old_to_new) *old_to_new = std::move(ids);
  return t;
}

PlaneTree reroot(const PlaneTree& t, int v, int k) {
  RotationSystem rs = to_rotation_system(t);
  std::vector<int> map;
  PlaneTree out = root_at(rs, v, k, &map);
  // carry parent-edge weights over (weights live on edges, not endpoints)
  for (int u = 0; u < t.size(); ++u) {
    const int w = t.node(u).weight;
    if (w == 0) continue;
    const int a = map[static_cast<std::size_t>(u)];
    const int b = map[static_cast<std::size_t>(t.node(u).parent)];
    if (out.node(a).parent == b) out.node(a).weight = w;
    else out.node(b).weight = w;
  }
  return out;
}

}  // namespace cmaps
