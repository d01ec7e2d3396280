#pragma once

#include <jantzen/dmodules.hpp>

#include <string>
#include <vector>

namespace jantzen {

// Diagram constructions. The deformed kinds and comparison take an order n;
// monodromy annotates MaxExt nodes with their gr-level under S.
enum class DiagramKind {
    DualVerma,
    Verma,
    DeformedDualVerma,
    DeformedVerma,
    MaxExt,
    Monodromy,
    Comparison,
};

DiagramKind parse_diagram_kind(const std::string& name);
std::string diagram_kind_name(DiagramKind kind);

enum class DiagramFormat { Dot, Ascii };
DiagramFormat parse_diagram_format(const std::string& name);

struct DiagramSpec {
    DiagramKind kind;
    long slice_min = 0;
    long slice_max = 0;
    long wmin = 0;
    long wmax = 0;
    int n = 2;  // truncation order for the deformed kinds
};

struct Diagram {
    struct Node {
        ModuleFamily family;
        long slice;
        Monomial mono;
        bool truncated = false;  // window-truncation stub
        bool grey = false;       // comparison: lies in im(s o can)
        int level = 0;           // monodromy: gr-level of the node
    };
    struct Edge {
        int src;
        int dst;
        OpName op;      // Can edges are tagged via the `dashed` flag
        bool dashed = false;
        Rational coeff;
        bool truncated = false;
    };
    std::vector<Node> nodes;
    std::vector<Edge> edges;
};

// Nodes are the weight-space bases over the window; edges come from act/can
// on each basis monomial. Targets outside the weight window become truncated
// stub nodes, never dropped.
Diagram build_diagram(const DiagramSpec& spec);

std::string emit(const Diagram& d, DiagramFormat format);

// Canonical sorted line-per-node/edge form; golden files store this.
std::string structure_text(const Diagram& d);

// Equality of node sets and edge multisets with coefficients.
bool structural_equal(const Diagram& a, const Diagram& b);

}  // namespace jantzen
