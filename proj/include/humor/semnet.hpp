#ifndef HUMOR_SEMNET_HPP_
#define HUMOR_SEMNET_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "humor/value.hpp"

namespace humor {

using RelationLabel = std::string;

struct Link {
  NodeId from;
  RelationLabel relation;
  NodeId to;

  friend auto operator<=>(const Link&, const Link&) = default;
};

// Immutable labeled graph of concept/signifier nodes. The add_* operations
// return a new network and leave the receiver untouched, so held values are
// safe to share across readers.
class Network {
 public:
  Network() = default;

  // Throws DuplicateNode when (label, kind) is already declared.
  std::pair<Network, NodeId> add_node(std::string_view label,
                                      NodeKind kind = NodeKind::Concept) const;

  // Idempotent on duplicate triples; throws MissingNode on unknown endpoints.
  Network add_link(const NodeId& from, const RelationLabel& relation,
                   const NodeId& to) const;

  bool has_node(const NodeId& id) const;
  std::optional<NodeId> find_node(std::string_view label, NodeKind kind) const;
  // Label lookup preferring signifier nodes over concepts.
  std::optional<NodeId> resolve_label(std::string_view label) const;

  // { to | (node, relation, to) in links }, sorted; throws MissingNode.
  std::vector<NodeId> relate(const RelationLabel& relation,
                             const NodeId& node) const;
  // { from | (from, relation, node) in links }, sorted; throws MissingNode.
  std::vector<NodeId> inverse_relate(const RelationLabel& relation,
                                     const NodeId& node) const;

  const std::set<NodeId>& nodes() const { return nodes_; }
  const std::set<Link>& links() const { return links_; }

 private:
  std::set<NodeId> nodes_;
  std::set<Link> links_;
  std::map<std::pair<NodeId, RelationLabel>, std::vector<NodeId>> forward_;
  std::map<std::pair<NodeId, RelationLabel>, std::vector<NodeId>> backward_;
};

}  // namespace humor

#endif  // HUMOR_SEMNET_HPP_
