#include "humor/value.hpp"

#include <algorithm>
#include <cstdio>

#include "humor/errors.hpp"

namespace humor {

std::string_view to_string(NodeKind kind) {
  return kind == NodeKind::Concept ? "concept" : "signifier";
}

ValueSet::ValueSet(ValueVec items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool ValueSet::contains(const Value& v) const {
  return std::binary_search(items_.begin(), items_.end(), v);
}

void ValueSet::insert(Value v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it == items_.end() || !(*it == v)) items_.insert(it, std::move(v));
}

void ValueSet::insert_all(const ValueSet& other) {
  for (const Value& v : other.items_) insert(v);
}

ValueSet ValueSet::set_union(const ValueSet& other) const {
  ValueVec out;
  std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                 other.items_.end(), std::back_inserter(out));
  ValueSet result;
  result.items_ = std::move(out);
  return result;
}

ValueSet ValueSet::set_intersection(const ValueSet& other) const {
  ValueVec out;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                        other.items_.end(), std::back_inserter(out));
  ValueSet result;
  result.items_ = std::move(out);
  return result;
}

ValueSet ValueSet::set_difference(const ValueSet& other) const {
  ValueVec out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(),
                      other.items_.end(), std::back_inserter(out));
  ValueSet result;
  result.items_ = std::move(out);
  return result;
}

std::vector<std::string> ValueSet::rendered_sorted() const {
  std::vector<std::string> out;
  out.reserve(items_.size());
  for (const Value& v : items_) out.push_back(v.render());
  std::sort(out.begin(), out.end());
  return out;
}

std::strong_ordering ValueSet::operator<=>(const ValueSet& other) const {
  return std::lexicographical_compare_three_way(
      items_.begin(), items_.end(), other.items_.begin(), other.items_.end());
}

bool ValueSet::operator==(const ValueSet& other) const {
  return items_ == other.items_;
}

Value Value::node(NodeId id) {
  Value v;
  v.rep_ = std::move(id);
  return v;
}

Value Value::node(std::string label, NodeKind kind) {
  return node(NodeId{std::move(label), kind});
}

Value Value::text(std::string s) {
  Value v;
  v.rep_ = std::move(s);
  return v;
}

Value Value::tuple(ValueVec items) {
  Value v;
  v.rep_ = TupleRep{std::move(items)};
  return v;
}

Value Value::set(ValueVec items) {
  Value v;
  v.rep_ = ValueSet(std::move(items));
  return v;
}

Value Value::set(ValueSet items) {
  Value v;
  v.rep_ = std::move(items);
  return v;
}

Value::Kind Value::kind() const {
  switch (rep_.index()) {
    case 0: return Kind::Node;
    case 1: return Kind::Text;
    case 2: return Kind::Tuple;
    default: return Kind::Set;
  }
}

const NodeId& Value::as_node() const {
  if (!is_node()) throw Error(Errc::DomainError, "value is not a node");
  return std::get<NodeId>(rep_);
}

const std::string& Value::as_text() const {
  if (!is_text()) throw Error(Errc::DomainError, "value is not text");
  return std::get<std::string>(rep_);
}

const ValueVec& Value::as_tuple() const {
  if (!is_tuple()) throw Error(Errc::DomainError, "value is not a tuple");
  return std::get<TupleRep>(rep_).items;
}

const ValueSet& Value::as_set() const {
  if (!is_set()) throw Error(Errc::DomainError, "value is not a set");
  return std::get<ValueSet>(rep_);
}

std::string render_text(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

std::string Value::render() const {
  switch (kind()) {
    case Kind::Node:
      return "#" + as_node().label;
    case Kind::Text:
      return render_text(as_text());
    case Kind::Tuple: {
      std::string out = "(";
      const ValueVec& items = as_tuple();
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ',';
        out += items[i].render();
      }
      out += ')';
      return out;
    }
    case Kind::Set: {
      std::string out = "{";
      auto rendered = as_set().rendered_sorted();
      for (std::size_t i = 0; i < rendered.size(); ++i) {
        if (i) out += ',';
        out += rendered[i];
      }
      out += '}';
      return out;
    }
  }
  return {};
}

std::strong_ordering Value::operator<=>(const Value& other) const {
  if (auto c = rep_.index() <=> other.rep_.index(); c != 0) return c;
  switch (kind()) {
    case Kind::Node:
      return as_node() <=> other.as_node();
    case Kind::Text:
      return as_text() <=> other.as_text();
    case Kind::Tuple: {
      const ValueVec& a = as_tuple();
      const ValueVec& b = other.as_tuple();
      return std::lexicographical_compare_three_way(a.begin(), a.end(),
                                                    b.begin(), b.end());
    }
    case Kind::Set:
      return as_set() <=> other.as_set();
  }
  return std::strong_ordering::equal;
}

bool Value::operator==(const Value& other) const {
  return (*this <=> other) == 0;
}

}  // namespace humor
