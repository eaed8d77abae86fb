#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

enum class NodeLabel { Union, Join };

constexpr NodeLabel flip(NodeLabel l) {
    return l == NodeLabel::Union ? NodeLabel::Join : NodeLabel::Union;
}

// Internal-vertex labels alternate by depth and are fully determined by the
// root label.
constexpr NodeLabel label_at_depth(NodeLabel root, int depth) {
    return depth % 2 == 0 ? root : flip(root);
}

// Vertex identity: child indices from the root, in stored canonical order.
// The empty path is the root.
using TreePath = std::vector<int>;

// Rooted unordered tree, no data on leaves, every internal vertex with >= 2
// children. Children are kept sorted in canonical order (leaves first, then
// lexicographically by canonical text), so equal values are isomorphic trees.
class Hierarchy {
public:
    Hierarchy() = default;  // leaf
    explicit Hierarchy(std::vector<Hierarchy> children);

    bool leaf() const { return kids_.empty(); }
    const std::vector<Hierarchy>& children() const { return kids_; }
    int size() const { return size_; }  // number of leaves

    const Hierarchy& at(const TreePath& path) const;

    bool operator==(const Hierarchy&) const = default;

private:
    std::vector<Hierarchy> kids_;
    int size_ = 1;
};

// A hierarchy plus the root label; labels of all other internal vertices
// follow by alternation. A single leaf is the cotree of K_1 (label unused).
class Cotree {
public:
    Cotree() = default;
    Cotree(Hierarchy h, NodeLabel root_label) : h_(std::move(h)), root_(root_label) {}

    const Hierarchy& hierarchy() const { return h_; }
    NodeLabel root_label() const { return root_; }
    int size() const { return h_.size(); }

    bool operator==(const Cotree& o) const {
        if (h_ != o.h_) return false;
        return h_.leaf() || root_ == o.root_;
    }

private:
    Hierarchy h_;
    NodeLabel root_ = NodeLabel::Union;
};

// Cotree skeleton in which exactly one leaf is the star and carries a graph
// payload. A bare star (no internal vertices) realizes the payload itself.
class QuasiCotree {
public:
    explicit QuasiCotree(Graph payload);  // bare star

    bool bare() const { return root_.kids.empty(); }
    const Graph& payload() const { return payload_; }
    NodeLabel root_label() const { return root_label_; }
    int size() const { return root_.size; }  // leaves, star counted once

    std::string text() const;  // canonical emission

    bool operator==(const QuasiCotree& o) const { return text() == o.text(); }

private:
    struct Node {
        std::vector<Node> kids;
        bool star = false;
        int size = 1;
        std::string key;  // canonical unlabeled text, used for child ordering
    };

    QuasiCotree() = default;

    Node root_;
    NodeLabel root_label_ = NodeLabel::Union;
    Graph payload_{1};

    friend QuasiCotree substitute_star(const Cotree&, const TreePath&, const Graph&);
    friend Graph realize_quasi(const QuasiCotree&);
    friend QuasiCotree parse_quasi(const std::string&);
    friend class TreeParser;
};

// ------------------------------------------------------------------ text

// Grammar (UTF-8): leaf "."; internal node "(" children ")" separated by
// spaces; cotrees carry a label prefix "U"/"J" on every internal node (the
// nested ones are redundant but written and validated); quasi-cotree star
// leaf is "{<graph6>}". Canonical emission orders children leaves-first,
// then lexicographically.
using ParsedTree = std::variant<Hierarchy, Cotree, QuasiCotree>;

ParsedTree parse_tree(const std::string& text);
Hierarchy parse_hierarchy(const std::string& text);
Cotree parse_cotree(const std::string& text);
QuasiCotree parse_quasi(const std::string& text);

std::string canonical_form(const Hierarchy& h);
std::string canonical_form(const Cotree& t);
std::string canonical_form(const QuasiCotree& qt);

// ------------------------------------------------------------ operations

// Leaves map to vertices in canonical leaf order; u,v adjacent iff their
// lowest common ancestor is labeled Join.
Graph realize(const Cotree& t);

// Inverse of realize on cographs: single vertex -> leaf, disconnected ->
// Union over components, co-disconnected -> Join over complement components.
// Throws NotACograph when both g and its complement are connected (n >= 2).
Cotree decompose(const Graph& g);

Cotree complement_cotree(const Cotree& t);
Hierarchy hierarchy_of(const Cotree& t);

// Full descendant subtree at a path, with the label it inherits from t.
Cotree subtree_at(const Cotree& t, const TreePath& u);

// First vertex (preorder) whose descendant subtree is isomorphic to pattern.
std::optional<TreePath> find_subhierarchy(const Hierarchy& h, const Hierarchy& pattern);

// Label-sensitive variant: the subtree's inherited labels must match the
// pattern's. A single-leaf pattern matches any leaf.
std::optional<TreePath> find_labeled_subtree(const Cotree& t, const Cotree& pattern);

// Replace the subtree at u by the star leaf carrying payload. Substituting
// at the root yields the bare star.
QuasiCotree substitute_star(const Cotree& t, const TreePath& u, const Graph& payload);

// Union/join evaluation with the star contributing its payload, expanded in
// place in leaf order.
Graph realize_quasi(const QuasiCotree& qt);

}  // namespace cospec
