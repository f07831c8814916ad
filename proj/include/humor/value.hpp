#ifndef HUMOR_VALUE_HPP_
#define HUMOR_VALUE_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace humor {

enum class NodeKind { Concept, Signifier };

std::string_view to_string(NodeKind kind);

// Nodes are interned by (label, kind): two mentions of the same concept are
// the same node, and a concept may coexist with a signifier of the same label.
struct NodeId {
  std::string label;
  NodeKind kind = NodeKind::Concept;

  friend std::strong_ordering operator<=>(const NodeId& a, const NodeId& b) {
    if (auto c = a.label <=> b.label; c != 0) return c;
    return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  }
  friend bool operator==(const NodeId&, const NodeId&) = default;
};

class Value;
using ValueVec = std::vector<Value>;

// Unordered, duplicate-free collection of values. Stored sorted on the
// structural order so iteration and comparison are deterministic.
class ValueSet {
 public:
  ValueSet() = default;
  explicit ValueSet(ValueVec items);

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const ValueVec& items() const { return items_; }
  ValueVec::const_iterator begin() const { return items_.begin(); }
  ValueVec::const_iterator end() const { return items_.end(); }

  bool contains(const Value& v) const;
  void insert(Value v);
  void insert_all(const ValueSet& other);

  ValueSet set_union(const ValueSet& other) const;
  ValueSet set_intersection(const ValueSet& other) const;
  ValueSet set_difference(const ValueSet& other) const;

  // Element renderings, sorted lexicographically (trace emission order).
  std::vector<std::string> rendered_sorted() const;

  std::strong_ordering operator<=>(const ValueSet& other) const;
  bool operator==(const ValueSet& other) const;

 private:
  ValueVec items_;
};

// One datum flowing through a constraint: a node reference, a piece of text,
// an ordered tuple, or a set. Tuples model multi-argument inputs; outputs of
// constraint application are always ValueSets.
class Value {
 public:
  enum class Kind { Node, Text, Tuple, Set };

  Value() : rep_(std::string()) {}

  static Value node(NodeId id);
  static Value node(std::string label, NodeKind kind = NodeKind::Concept);
  static Value text(std::string s);
  static Value tuple(ValueVec items);
  static Value set(ValueVec items);
  static Value set(ValueSet items);

  Kind kind() const;
  bool is_node() const { return kind() == Kind::Node; }
  bool is_text() const { return kind() == Kind::Text; }
  bool is_tuple() const { return kind() == Kind::Tuple; }
  bool is_set() const { return kind() == Kind::Set; }

  const NodeId& as_node() const;
  const std::string& as_text() const;
  const ValueVec& as_tuple() const;
  const ValueSet& as_set() const;

  // Canonical rendering: text as a JSON string, node as #label, tuple as
  // (a,b), set as {..} with members sorted by their rendering.
  std::string render() const;

  std::strong_ordering operator<=>(const Value& other) const;
  bool operator==(const Value& other) const;

 private:
  struct TupleRep {
    ValueVec items;
  };
  std::variant<NodeId, std::string, TupleRep, ValueSet> rep_;
};

// Renders a string with JSON quoting/escaping.
std::string render_text(std::string_view s);

}  // namespace humor

#endif  // HUMOR_VALUE_HPP_
