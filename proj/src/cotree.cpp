#include "cospec/cotree.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>

namespace cospec {

namespace {

// Child order: leaves before stars before internal nodes, then plain
// lexicographic on the canonical text.
int kind_rank(char c) { return c == '.' ? 0 : c == '{' ? 1 : 2; }

bool child_text_less(const std::string& a, const std::string& b) {
    int ra = kind_rank(a[0]), rb = kind_rank(b[0]);
    if (ra != rb) return ra < rb;
    return a < b;
}

std::string hierarchy_text(const Hierarchy& h) {
    if (h.leaf()) return ".";
    std::string out = "(";
    bool first = true;
    for (const auto& k : h.children()) {
        if (!first) out += ' ';
        out += hierarchy_text(k);
        first = false;
    }
    out += ')';
    return out;
}

char label_char(NodeLabel l) { return l == NodeLabel::Union ? 'U' : 'J'; }

std::string cotree_text(const Hierarchy& h, NodeLabel label) {
    if (h.leaf()) return ".";
    std::string out;
    out += label_char(label);
    out += '(';
    bool first = true;
    for (const auto& k : h.children()) {
        if (!first) out += ' ';
        out += cotree_text(k, flip(label));
        first = false;
    }
    out += ')';
    return out;
}

}  // namespace

Hierarchy::Hierarchy(std::vector<Hierarchy> children) : kids_(std::move(children)) {
    if (kids_.size() < 2)
        throw UnaryInternalNode("internal vertex must have at least 2 children");
    std::vector<std::pair<std::string, std::size_t>> order;
    order.reserve(kids_.size());
    for (std::size_t i = 0; i < kids_.size(); ++i)
        order.emplace_back(hierarchy_text(kids_[i]), i);
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return child_text_less(a.first, b.first);
    });
    std::vector<Hierarchy> sorted;
    sorted.reserve(kids_.size());
    size_ = 0;
    for (auto& [text, idx] : order) {
        size_ += kids_[idx].size();
        sorted.push_back(std::move(kids_[idx]));
    }
    kids_ = std::move(sorted);
}

const Hierarchy& Hierarchy::at(const TreePath& path) const {
    const Hierarchy* cur = this;
    for (int step : path) {
        if (step < 0 || step >= static_cast<int>(cur->kids_.size()))
            throw VertexNotFound("tree path leaves the hierarchy");
        cur = &cur->kids_[step];
    }
    return *cur;
}

std::string canonical_form(const Hierarchy& h) { return hierarchy_text(h); }

std::string canonical_form(const Cotree& t) {
    return cotree_text(t.hierarchy(), t.root_label());
}

std::string canonical_form(const QuasiCotree& qt) { return qt.text(); }

// ------------------------------------------------------------- parsing

class TreeParser {
public:
    explicit TreeParser(const std::string& text) : s_(text) {}

    ParsedTree run() {
        skip_ws();
        Raw root = parse_node();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError("trailing input after tree");
        return to_tree(root);
    }

private:
    struct Raw {
        std::vector<Raw> kids;
        bool star = false;
        std::string g6;
        bool labeled = false;
        NodeLabel label = NodeLabel::Union;
        bool leaf() const { return kids.empty(); }
    };

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    Raw parse_node() {
        skip_ws();
        char c = peek();
        if (c == '.') {
            ++pos_;
            return Raw{};
        }
        if (c == '{') {
            ++pos_;
            std::size_t end = s_.find('}', pos_);
            if (end == std::string::npos) throw SyntaxError("unterminated star leaf");
            Raw r;
            r.star = true;
            r.g6 = s_.substr(pos_, end - pos_);
            pos_ = end + 1;
            return r;
        }
        Raw r;
        if (c == 'U' || c == 'J') {
            r.labeled = true;
            r.label = c == 'U' ? NodeLabel::Union : NodeLabel::Join;
            ++pos_;
            if (peek() != '(') throw SyntaxError("label must be followed by '('");
        }
        if (peek() != '(') throw SyntaxError(std::string("unexpected character '") + c + "'");
        ++pos_;
        while (true) {
            skip_ws();
            if (peek() == ')') {
                ++pos_;
                break;
            }
            if (peek() == '\0') throw SyntaxError("unterminated '('");
            r.kids.push_back(parse_node());
        }
        if (r.kids.size() == 0) throw SyntaxError("empty internal node");
        if (r.kids.size() == 1)
            throw UnaryInternalNode("no vertex may have exactly one child");
        return r;
    }

    // Validation that applies to the whole raw tree: label consistency
    // (all-or-none, alternating) and at most one star.
    void scan(const Raw& r, bool& any_label, bool& any_plain_internal, int& stars,
              std::string& star_g6) const {
        if (r.leaf()) {
            if (r.star) {
                ++stars;
                if (stars > 1) throw MultipleStarLeaves("more than one star leaf");
                star_g6 = r.g6;
            }
            return;
        }
        if (r.labeled)
            any_label = true;
        else
            any_plain_internal = true;
        for (const auto& k : r.kids) scan(k, any_label, any_plain_internal, stars, star_g6);
    }

    void check_alternation(const Raw& r) const {
        for (const auto& k : r.kids) {
            if (!k.leaf()) {
                if (k.label != flip(r.label))
                    throw SyntaxError("internal labels must alternate by depth");
                check_alternation(k);
            }
        }
    }

    static Hierarchy to_hierarchy(const Raw& r) {
        if (r.leaf()) return Hierarchy{};
        std::vector<Hierarchy> kids;
        kids.reserve(r.kids.size());
        for (const auto& k : r.kids) kids.push_back(to_hierarchy(k));
        return Hierarchy(std::move(kids));
    }

    static QuasiCotree::Node to_qnode(const Raw& r) {
        QuasiCotree::Node n;
        if (r.leaf()) {
            n.star = r.star;
            n.key = r.star ? "{" + r.g6 + "}" : ".";
            return n;
        }
        for (const auto& k : r.kids) n.kids.push_back(to_qnode(k));
        std::stable_sort(n.kids.begin(), n.kids.end(),
                         [](const QuasiCotree::Node& a, const QuasiCotree::Node& b) {
                             return child_text_less(a.key, b.key);
                         });
        n.size = 0;
        n.key = "(";
        for (std::size_t i = 0; i < n.kids.size(); ++i) {
            if (i) n.key += ' ';
            n.key += n.kids[i].key;
            n.size += n.kids[i].size;
        }
        n.key += ')';
        return n;
    }

    ParsedTree to_tree(const Raw& root) {
        bool any_label = false, any_plain = false;
        int stars = 0;
        std::string star_g6;
        scan(root, any_label, any_plain, stars, star_g6);
        if (any_label && any_plain)
            throw SyntaxError("mix of labeled and unlabeled internal vertices");

        if (stars == 1) {
            if (!root.leaf() && !any_label)
                throw SyntaxError("star leaf requires a labeled cotree");
            QuasiCotree qt;
            qt.root_ = to_qnode(root);
            qt.root_label_ = root.labeled ? root.label : NodeLabel::Union;
            qt.payload_ = parse_graph6(star_g6);
            if (!root.leaf()) check_alternation(root);
            return qt;
        }
        if (any_label) {
            check_alternation(root);
            return Cotree(to_hierarchy(root), root.label);
        }
        return to_hierarchy(root);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

ParsedTree parse_tree(const std::string& text) { return TreeParser(text).run(); }

Hierarchy parse_hierarchy(const std::string& text) {
    ParsedTree t = parse_tree(text);
    if (auto* h = std::get_if<Hierarchy>(&t)) return std::move(*h);
    throw SyntaxError("expected an unlabeled hierarchy");
}

Cotree parse_cotree(const std::string& text) {
    ParsedTree t = parse_tree(text);
    if (auto* c = std::get_if<Cotree>(&t)) return std::move(*c);
    if (auto* h = std::get_if<Hierarchy>(&t)) {
        if (h->leaf()) return Cotree{};  // "." is the cotree of K_1
        throw SyntaxError("cotree requires a root label");
    }
    throw SyntaxError("unexpected star leaf in cotree");
}

QuasiCotree parse_quasi(const std::string& text) {
    ParsedTree t = parse_tree(text);
    if (auto* q = std::get_if<QuasiCotree>(&t)) return std::move(*q);
    throw StarAbsentWhenRequired("quasi-cotree requires exactly one star leaf");
}

// -------------------------------------------------------------- realize

namespace {

// Places the subtree into out at vertex offset; returns its leaf count.
int realize_rec(const Hierarchy& h, NodeLabel label, Graph& out, int offset) {
    if (h.leaf()) return 1;
    std::vector<std::pair<int, int>> blocks;  // offset, size
    int off = offset;
    for (const auto& k : h.children()) {
        int s = realize_rec(k, flip(label), out, off);
        blocks.emplace_back(off, s);
        off += s;
    }
    if (label == NodeLabel::Join) {
        for (std::size_t a = 0; a < blocks.size(); ++a)
            for (std::size_t b = a + 1; b < blocks.size(); ++b)
                for (int u = blocks[a].first; u < blocks[a].first + blocks[a].second; ++u)
                    for (int v = blocks[b].first; v < blocks[b].first + blocks[b].second; ++v)
                        out.set_edge(u, v);
    }
    return off - offset;
}

}  // namespace

Graph realize(const Cotree& t) {
    Graph out(t.size());
    realize_rec(t.hierarchy(), t.root_label(), out, 0);
    return out;
}

// ------------------------------------------------------------ decompose

namespace {

std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.order();
    std::uint64_t seen = 0;
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if ((seen >> s) & 1) continue;
        std::uint64_t comp = 0, frontier = std::uint64_t{1} << s;
        while (frontier) {
            comp |= frontier;
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(v);
            }
            frontier = next & ~comp;
        }
        seen |= comp;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if ((comp >> v) & 1) verts.push_back(v);
        comps.push_back(std::move(verts));
    }
    return comps;
}

}  // namespace

Cotree decompose(const Graph& g) {
    if (g.order() == 1) return Cotree{};
    auto split = [&](const Graph& by, NodeLabel label) -> std::optional<Cotree> {
        auto comps = components(by);
        if (comps.size() < 2) return std::nullopt;
        std::vector<Hierarchy> kids;
        kids.reserve(comps.size());
        for (const auto& verts : comps)
            kids.push_back(decompose(induced_subgraph(g, verts)).hierarchy());
        return Cotree(Hierarchy(std::move(kids)), label);
    };
    if (auto c = split(g, NodeLabel::Union)) return *c;
    if (auto c = split(complement(g), NodeLabel::Join)) return *c;
    throw NotACograph("graph and its complement are both connected (induced P4 present)");
}

Cotree complement_cotree(const Cotree& t) {
    return Cotree(t.hierarchy(), flip(t.root_label()));
}

Hierarchy hierarchy_of(const Cotree& t) { return t.hierarchy(); }

Cotree subtree_at(const Cotree& t, const TreePath& u) {
    return Cotree(t.hierarchy().at(u),
                  label_at_depth(t.root_label(), static_cast<int>(u.size())));
}

// ----------------------------------------------------- subtree search

namespace {

bool find_rec(const Hierarchy& node, const std::string& pattern_text, int pattern_size,
              TreePath& path, std::optional<TreePath>& out) {
    if (node.size() < pattern_size) return false;
    if (node.size() == pattern_size && hierarchy_text(node) == pattern_text) {
        out = path;
        return true;
    }
    for (std::size_t i = 0; i < node.children().size(); ++i) {
        path.push_back(static_cast<int>(i));
        if (find_rec(node.children()[i], pattern_text, pattern_size, path, out)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<TreePath> find_subhierarchy(const Hierarchy& h, const Hierarchy& pattern) {
    if (pattern.size() < 2) throw PatternTooSmall("pattern must have size >= 2");
    std::optional<TreePath> out;
    TreePath path;
    find_rec(h, hierarchy_text(pattern), pattern.size(), path, out);
    return out;
}

namespace {

// parity-sensitive variant: a match at depth d must carry the pattern's
// label under t's alternation (leaf patterns match any leaf)
bool find_labeled_rec(const Hierarchy& node, const std::string& pattern_text,
                      int pattern_size, bool pattern_leaf, NodeLabel want,
                      NodeLabel here, TreePath& path, std::optional<TreePath>& out) {
    if (node.size() < pattern_size) return false;
    if (node.size() == pattern_size && (pattern_leaf || want == here) &&
        hierarchy_text(node) == pattern_text) {
        out = path;
        return true;
    }
    for (std::size_t i = 0; i < node.children().size(); ++i) {
        path.push_back(static_cast<int>(i));
        if (find_labeled_rec(node.children()[i], pattern_text, pattern_size, pattern_leaf,
                             want, flip(here), path, out))
            return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<TreePath> find_labeled_subtree(const Cotree& t, const Cotree& pattern) {
    std::optional<TreePath> out;
    TreePath path;
    find_labeled_rec(t.hierarchy(), hierarchy_text(pattern.hierarchy()), pattern.size(),
                     pattern.hierarchy().leaf(), pattern.root_label(), t.root_label(),
                     path, out);
    return out;
}

// --------------------------------------------------------- quasi-cotree

QuasiCotree::QuasiCotree(Graph payload) : payload_(std::move(payload)) {
    root_.star = true;
    root_.key = "{" + emit_graph6(payload_) + "}";
}

QuasiCotree substitute_star(const Cotree& t, const TreePath& u, const Graph& payload) {
    t.hierarchy().at(u);  // throws VertexNotFound on a bad path
    if (u.empty()) return QuasiCotree(payload);

    std::string star_key = "{" + emit_graph6(payload) + "}";

    struct Builder {
        const TreePath& path;
        const std::string& star_key;
        QuasiCotree::Node build(const Hierarchy& h, std::size_t depth, bool on_path) {
            QuasiCotree::Node n;
            if (on_path && depth == path.size()) {
                n.star = true;
                n.key = star_key;
                return n;
            }
            if (h.leaf()) {
                n.key = ".";
                return n;
            }
            for (std::size_t i = 0; i < h.children().size(); ++i) {
                bool child_on_path = on_path && depth < path.size() &&
                                     static_cast<int>(i) == path[depth];
                n.kids.push_back(build(h.children()[i], depth + 1, child_on_path));
            }
            std::stable_sort(n.kids.begin(), n.kids.end(),
                             [](const QuasiCotree::Node& a, const QuasiCotree::Node& b) {
                                 return child_text_less(a.key, b.key);
                             });
            n.size = 0;
            n.key = "(";
            for (std::size_t i = 0; i < n.kids.size(); ++i) {
                if (i) n.key += ' ';
                n.key += n.kids[i].key;
                n.size += n.kids[i].size;
            }
            n.key += ')';
            return n;
        }
    };
    QuasiCotree qt;
    Builder b{u, star_key};
    qt.root_ = b.build(t.hierarchy(), 0, true);
    qt.root_label_ = t.root_label();
    qt.payload_ = payload;
    return qt;
}

std::string QuasiCotree::text() const {
    struct Emit {
        static std::string run(const Node& n, NodeLabel label) {
            if (n.kids.empty()) return n.key;  // "." or "{g6}"
            std::string out;
            out += label_char(label);
            out += '(';
            for (std::size_t i = 0; i < n.kids.size(); ++i) {
                if (i) out += ' ';
                out += run(n.kids[i], flip(label));
            }
            out += ')';
            return out;
        }
    };
    return Emit::run(root_, root_label_);
}

Graph realize_quasi(const QuasiCotree& qt) {
    const int star_order = qt.payload().order();

    struct Sizer {
        int star_order;
        int run(const QuasiCotree::Node& n) const {
            if (n.kids.empty()) return n.star ? star_order : 1;
            int total = 0;
            for (const auto& k : n.kids) total += run(k);
            return total;
        }
    };
    Sizer sizer{star_order};
    Graph out(sizer.run(qt.root_));

    struct Placer {
        const Graph& payload;
        Graph& out;
        int run(const QuasiCotree::Node& n, NodeLabel label, int offset) const {
            if (n.kids.empty()) {
                if (!n.star) return 1;
                for (int u = 0; u < payload.order(); ++u)
                    for (int v = u + 1; v < payload.order(); ++v)
                        if (payload.adjacent(u, v)) out.set_edge(offset + u, offset + v);
                return payload.order();
            }
            std::vector<std::pair<int, int>> blocks;
            int off = offset;
            for (const auto& k : n.kids) {
                int s = run(k, flip(label), off);
                blocks.emplace_back(off, s);
                off += s;
            }
            if (label == NodeLabel::Join) {
                for (std::size_t a = 0; a < blocks.size(); ++a)
                    for (std::size_t b = a + 1; b < blocks.size(); ++b)
                        for (int u = blocks[a].first; u < blocks[a].first + blocks[a].second; ++u)
                            for (int v = blocks[b].first; v < blocks[b].first + blocks[b].second; ++v)
                                out.set_edge(u, v);
            }
            return off - offset;
        }
    };
    Placer placer{qt.payload(), out};
    placer.run(qt.root_, qt.root_label(), 0);
    return out;
}

}  // namespace cospec
