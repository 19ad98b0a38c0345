#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace dgs {

enum class LabelKind : std::uint8_t { Hash = 0, Int = 1, Str = 2, Count = 3, Seq = 4 };

// An ordered, recursive label value.  Labels are interned: structurally
// equal labels share one node, so equality is a pointer comparison and
// the nested labels that refinement builds stay compact through sharing.
//
// Total order: Hash < Int < Str < Count < Seq; within a kind the natural
// order, sequences lexicographic.
class Label {
public:
  Label();  // Int(0), the default label
  static Label hash_mark();
  static Label integer(std::int64_t v);
  static Label text(std::string s);
  static Label count(std::uint64_t first, std::uint64_t second);
  static Label seq(std::vector<Label> items);

  LabelKind kind() const;
  std::int64_t int_value() const;
  const std::string& text_value() const;
  std::pair<std::uint64_t, std::uint64_t> count_value() const;
  const std::vector<Label>& items() const;

  bool operator==(const Label& o) const { return node_ == o.node_; }
  std::strong_ordering operator<=>(const Label& o) const;
  std::size_t hash() const;

  std::string str() const;

  struct Node;

private:
  explicit Label(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct LabelHasher {
  std::size_t operator()(const Label& l) const { return l.hash(); }
};

}  // namespace dgs
