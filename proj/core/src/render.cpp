#include <jantzen/render.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace jantzen {

namespace {

struct NodeKey {
    FamilyTag tag;
    long slice;
    Monomial mono;
    auto operator<=>(const NodeKey&) const = default;
};

std::string node_key_str(const Diagram::Node& nd) {
    std::ostringstream os;
    os << nd.family.str() << ":" << nd.slice << ":" << nd.mono.k << ","
       << nd.mono.l << "," << nd.mono.m;
    return os.str();
}

std::string edge_tag(const Diagram::Edge& e) {
    return e.dashed ? "can" : op_name(e.op);
}

class Builder {
public:
    explicit Builder(const DiagramSpec& spec) : spec_(spec) {}

    Diagram build() {
        if (spec_.slice_min > spec_.slice_max || spec_.wmin > spec_.wmax)
            throw std::invalid_argument("diagram window is empty");
        switch (spec_.kind) {
        case DiagramKind::DualVerma:
            family_diagram(ModuleFamily::plus());
            break;
        case DiagramKind::Verma:
            family_diagram(ModuleFamily::shriek());
            break;
        case DiagramKind::DeformedDualVerma:
            family_diagram(ModuleFamily::def_plus(spec_.n));
            break;
        case DiagramKind::DeformedVerma:
            family_diagram(ModuleFamily::def_shriek(spec_.n));
            break;
        case DiagramKind::MaxExt:
            family_diagram(ModuleFamily::max_ext(),
                           {OpName::Le, OpName::Lf, OpName::S});
            break;
        case DiagramKind::Monodromy:
            monodromy_diagram();
            break;
        case DiagramKind::Comparison:
            comparison_diagram();
            break;
        }
        return std::move(d_);
    }

private:
    int node_index(const ModuleFamily& family, long slice, const Monomial& mono,
                   bool truncated) {
        NodeKey key{family.tag, slice, mono};
        auto it = index_.find(key);
        if (it != index_.end())
            return it->second;
        int idx = static_cast<int>(d_.nodes.size());
        d_.nodes.push_back({family, slice, mono, truncated, false, 0});
        index_.emplace(key, idx);
        return idx;
    }

    void add_family_nodes(const ModuleFamily& family) {
        for (long s = spec_.slice_min; s <= spec_.slice_max; ++s)
            for (long w = spec_.wmax; w >= spec_.wmin; --w)
                for (const Monomial& mono : weight_space_basis(family, s, w))
                    node_index(family, s, mono, false);
    }

    void add_action_edges(const ModuleFamily& family,
                          const std::vector<OpName>& ops) {
        const size_t fixed = d_.nodes.size();
        for (size_t i = 0; i < fixed; ++i) {
            const Diagram::Node nd = d_.nodes[i];
            if (nd.truncated || !(nd.family == family))
                continue;
            for (OpName op : ops) {
                Element image = act(op, Element::monomial(family, nd.mono));
                for (const auto& [target, coeff] : image.terms()) {
                    bool inside = target.weight() >= spec_.wmin &&
                                  target.weight() <= spec_.wmax;
                    int dst = node_index(family, nd.slice, target, !inside);
                    d_.edges.push_back({static_cast<int>(i), dst, op, false,
                                        coeff, !inside});
                }
            }
        }
    }

    void family_diagram(const ModuleFamily& family,
                        std::vector<OpName> ops = {OpName::Le, OpName::Lf,
                                                   OpName::Lh}) {
        add_family_nodes(family);
        add_action_edges(family, ops);
    }

    void monodromy_diagram() {
        ModuleFamily family = ModuleFamily::max_ext();
        add_family_nodes(family);
        add_action_edges(family, {OpName::S});
        // gr-level of each node: sources of s sit in gr^1, images in gr^-1.
        for (auto& nd : d_.nodes) {
            if (nd.truncated)
                continue;
            if (!act(OpName::S, Element::monomial(family, nd.mono)).is_zero())
                nd.level = 1;
            else if (nd.mono.m == 1)
                nd.level = -1;
        }
    }

    void comparison_diagram() {
        ModuleFamily src = ModuleFamily::def_shriek(spec_.n);
        ModuleFamily dst = ModuleFamily::def_plus(spec_.n);
        add_family_nodes(src);
        add_family_nodes(dst);
        const size_t fixed = d_.nodes.size();
        for (size_t i = 0; i < fixed; ++i) {
            const Diagram::Node nd = d_.nodes[i];
            if (!(nd.family == src))
                continue;
            Element image = can(Element::monomial(src, nd.mono));
            for (const auto& [target, coeff] : image.terms()) {
                bool inside = target.weight() >= spec_.wmin &&
                              target.weight() <= spec_.wmax;
                int j = node_index(dst, nd.slice, target, !inside);
                d_.edges.push_back({static_cast<int>(i), j, OpName::S, true,
                                    coeff, !inside});
            }
            // Grey marks: the image of s o can inside the deformed dual Verma.
            Element scan = s1n(Element::monomial(src, nd.mono));
            for (const auto& [target, coeff] : scan.terms()) {
                NodeKey key{dst.tag, nd.slice, target};
                auto it = index_.find(key);
                if (it != index_.end())
                    d_.nodes[it->second].grey = true;
            }
        }
    }

    DiagramSpec spec_;
    Diagram d_;
    std::map<NodeKey, int> index_;
};

std::string dot_color(OpName op) {
    switch (op) {
    case OpName::Le: return "green";
    case OpName::Lf: return "red";
    case OpName::Lh: return "blue";
    default: return "black";
    }
}

std::string emit_dot(const Diagram& d) {
    std::ostringstream os;
    os << "digraph jantzen {\n  rankdir=BT;\n";
    // Group nodes by slice so each Verma slice becomes one cluster.
    std::map<long, std::vector<int>> by_slice;
    for (size_t i = 0; i < d.nodes.size(); ++i)
        by_slice[d.nodes[i].slice].push_back(static_cast<int>(i));
    for (const auto& [slice, idxs] : by_slice) {
        os << "  subgraph cluster_slice_" << (slice < 0 ? "m" : "")
           << (slice < 0 ? -slice : slice) << " {\n"
           << "    label=\"slice " << slice << "\";\n";
        for (int i : idxs) {
            const auto& nd = d.nodes[i];
            os << "    n" << i << " [label=\"" << nd.mono.str(nd.family);
            if (nd.level != 0)
                os << " (gr " << nd.level << ")";
            os << "\"";
            if (nd.truncated)
                os << ", style=dotted";
            else if (nd.grey)
                os << ", style=filled, fillcolor=grey";
            os << "];\n";
        }
        os << "  }\n";
    }
    for (const auto& e : d.edges) {
        os << "  n" << e.src << " -> n" << e.dst << " [label=\""
           << to_string(e.coeff) << "\", color=" << dot_color(e.op);
        if (e.dashed)
            os << ", style=dashed";
        else if (e.truncated)
            os << ", style=dotted";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string emit_ascii(const Diagram& d) {
    std::ostringstream os;
    std::map<long, std::map<std::pair<long, long>, std::vector<int>>> grid;
    long mmax = 0;
    for (size_t i = 0; i < d.nodes.size(); ++i) {
        const auto& nd = d.nodes[i];
        grid[nd.slice][{nd.mono.m, nd.mono.weight()}].push_back(
            static_cast<int>(i));
        mmax = std::max(mmax, nd.mono.m);
    }
    long wmin = 0, wmax = 0;
    bool first = true;
    for (const auto& nd : d.nodes) {
        long w = nd.mono.weight();
        wmin = first ? w : std::min(wmin, w);
        wmax = first ? w : std::max(wmax, w);
        first = false;
    }
    for (const auto& [slice, cells] : grid) {
        os << "slice " << slice << "\n";
        for (long m = mmax; m >= 0; --m) {
            os << "  m=" << m << " |";
            for (long w = wmax; w >= wmin; --w) {
                std::string cell;
                auto it = cells.find({m, w});
                if (it != cells.end())
                    for (int i : it->second) {
                        if (!cell.empty())
                            cell += ",";
                        cell += d.nodes[i].mono.str(d.nodes[i].family);
                        if (d.nodes[i].truncated)
                            cell += "~";
                        if (d.nodes[i].grey)
                            cell += "*";
                    }
                os << " " << (cell.empty() ? "." : cell);
                os << std::string(
                    cell.size() < 12 ? 12 - cell.size() : size_t{1}, ' ');
            }
            os << "\n";
        }
        os << "  w:  ";
        for (long w = wmax; w >= wmin; --w) {
            std::string lbl = std::to_string(w);
            os << " " << lbl
               << std::string(lbl.size() < 12 ? 12 - lbl.size() : size_t{1},
                              ' ');
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace

DiagramKind parse_diagram_kind(const std::string& name) {
    if (name == "dual-verma") return DiagramKind::DualVerma;
    if (name == "verma") return DiagramKind::Verma;
    if (name == "deformed-dual-verma") return DiagramKind::DeformedDualVerma;
    if (name == "deformed-verma") return DiagramKind::DeformedVerma;
    if (name == "max-ext") return DiagramKind::MaxExt;
    if (name == "monodromy") return DiagramKind::Monodromy;
    if (name == "comparison") return DiagramKind::Comparison;
    throw std::invalid_argument("unknown diagram kind: " + name);
}

std::string diagram_kind_name(DiagramKind kind) {
    switch (kind) {
    case DiagramKind::DualVerma: return "dual-verma";
    case DiagramKind::Verma: return "verma";
    case DiagramKind::DeformedDualVerma: return "deformed-dual-verma";
    case DiagramKind::DeformedVerma: return "deformed-verma";
    case DiagramKind::MaxExt: return "max-ext";
    case DiagramKind::Monodromy: return "monodromy";
    case DiagramKind::Comparison: return "comparison";
    }
    return "?";
}

DiagramFormat parse_diagram_format(const std::string& name) {
    if (name == "dot") return DiagramFormat::Dot;
    if (name == "ascii") return DiagramFormat::Ascii;
    throw std::invalid_argument("unknown diagram format: " + name);
}

Diagram build_diagram(const DiagramSpec& spec) {
    return Builder(spec).build();
}

std::string emit(const Diagram& d, DiagramFormat format) {
    return format == DiagramFormat::Dot ? emit_dot(d) : emit_ascii(d);
}

std::string structure_text(const Diagram& d) {
    std::vector<std::string> lines;
    for (const auto& nd : d.nodes) {
        std::string line = "node " + node_key_str(nd);
        if (nd.truncated)
            line += " trunc";
        if (nd.grey)
            line += " grey";
        if (nd.level != 0)
            line += " gr=" + std::to_string(nd.level);
        lines.push_back(std::move(line));
    }
    for (const auto& e : d.edges) {
        std::string line = "edge " + node_key_str(d.nodes[e.src]) + " -> " +
                           node_key_str(d.nodes[e.dst]) + " " + edge_tag(e) +
                           " " + to_string(e.coeff);
        if (e.truncated)
            line += " trunc";
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& line : lines) {
        out += line;
        out += "\n";
    }
    return out;
}

bool structural_equal(const Diagram& a, const Diagram& b) {
    return structure_text(a) == structure_text(b);
}

}  // namespace jantzen
