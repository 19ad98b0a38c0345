#include "dgs/label.hpp"

#include <mutex>
#include <unordered_set>

namespace dgs {

struct Label::Node {
  LabelKind kind = LabelKind::Int;
  std::int64_t ival = 0;
  std::string sval;
  std::pair<std::uint64_t, std::uint64_t> cval{0, 0};
  std::vector<Label> children;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

std::size_t node_hash(const Label::Node& n) {
  std::size_t h = static_cast<std::size_t>(n.kind) + 1;
  switch (n.kind) {
    case LabelKind::Hash: break;
    case LabelKind::Int: h = mix(h, static_cast<std::size_t>(n.ival)); break;
    case LabelKind::Str: h = mix(h, std::hash<std::string>{}(n.sval)); break;
    case LabelKind::Count:
      h = mix(h, static_cast<std::size_t>(n.cval.first));
      h = mix(h, static_cast<std::size_t>(n.cval.second));
      break;
    case LabelKind::Seq:
      for (const Label& c : n.children) h = mix(h, c.hash());
      break;
  }
  return h;
}

struct NodeKeyEq {
  bool operator()(const std::shared_ptr<const Label::Node>& a,
                  const std::shared_ptr<const Label::Node>& b) const {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
      case LabelKind::Hash: return true;
      case LabelKind::Int: return a->ival == b->ival;
      case LabelKind::Str: return a->sval == b->sval;
      case LabelKind::Count: return a->cval == b->cval;
      case LabelKind::Seq: return a->children == b->children;  // pointer equality per entry
    }
    return false;
  }
};

struct NodeKeyHash {
  std::size_t operator()(const std::shared_ptr<const Label::Node>& n) const { return n->hash; }
};

// Intern table; nodes live for the process lifetime.
std::shared_ptr<const Label::Node> intern(Label::Node&& n) {
  static std::mutex mu;
  static auto* table = new std::unordered_set<std::shared_ptr<const Label::Node>, NodeKeyHash, NodeKeyEq>();
  n.hash = node_hash(n);
  auto candidate = std::make_shared<const Label::Node>(std::move(n));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = table->insert(candidate);
  return *it;
}

}  // namespace

Label::Label() {
  Node n;
  n.kind = LabelKind::Int;
  node_ = intern(std::move(n));
}

Label Label::hash_mark() {
  Node n;
  n.kind = LabelKind::Hash;
  return Label(intern(std::move(n)));
}

Label Label::integer(std::int64_t v) {
  Node n;
  n.kind = LabelKind::Int;
  n.ival = v;
  return Label(intern(std::move(n)));
}

Label Label::text(std::string s) {
  Node n;
  n.kind = LabelKind::Str;
  n.sval = std::move(s);
  return Label(intern(std::move(n)));
}

Label Label::count(std::uint64_t first, std::uint64_t second) {
  Node n;
  n.kind = LabelKind::Count;
  n.cval = {first, second};
  return Label(intern(std::move(n)));
}

Label Label::seq(std::vector<Label> items) {
  Node n;
  n.kind = LabelKind::Seq;
  n.children = std::move(items);
  return Label(intern(std::move(n)));
}

LabelKind Label::kind() const { return node_->kind; }
std::int64_t Label::int_value() const { return node_->ival; }
const std::string& Label::text_value() const { return node_->sval; }
std::pair<std::uint64_t, std::uint64_t> Label::count_value() const { return node_->cval; }
const std::vector<Label>& Label::items() const { return node_->children; }
std::size_t Label::hash() const { return node_->hash; }

std::strong_ordering Label::operator<=>(const Label& o) const {
  if (node_ == o.node_) return std::strong_ordering::equal;
  if (node_->kind != o.node_->kind) return node_->kind <=> o.node_->kind;
  switch (node_->kind) {
    case LabelKind::Hash: return std::strong_ordering::equal;
    case LabelKind::Int: return node_->ival <=> o.node_->ival;
    case LabelKind::Str: return node_->sval.compare(o.node_->sval) <=> 0;
    case LabelKind::Count: return node_->cval <=> o.node_->cval;
    case LabelKind::Seq: {
      const auto& a = node_->children;
      const auto& b = o.node_->children;
      for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        auto c = a[i] <=> b[i];
        if (c != std::strong_ordering::equal) return c;
      }
      return a.size() <=> b.size();
    }
  }
  return std::strong_ordering::equal;
}

std::string Label::str() const {
  switch (kind()) {
    case LabelKind::Hash: return "#";
    case LabelKind::Int: return std::to_string(int_value());
    case LabelKind::Str: return "\"" + text_value() + "\"";
    case LabelKind::Count:
      return "(" + std::to_string(count_value().first) + "," +
             std::to_string(count_value().second) + ")";
    case LabelKind::Seq: {
      std::string out = "[";
      for (std::size_t i = 0; i < items().size(); ++i) {
        if (i > 0) out += ",";
        out += items()[i].str();
      }
      return out + "]";
    }
  }
  return "?";
}

}  // namespace dgs
