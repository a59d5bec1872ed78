// Arrangement of the lines through every pair of input points, clipped to a
// bounding box chosen beyond every arrangement vertex. Cells are the bounded
// faces of the clipped subdivision; each corresponds to exactly one cell of
// the unclipped arrangement (unbounded cells keep a sample beyond all
// vertices, so far apices are represented).
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "balis/geom.hpp"
#include "balis/points.hpp"

namespace balis {

struct ArrangementLine {
    int i = -1, j = -1;  // defining pair, i < j; -1 for synthetic lines
    BigInt a, b, c;      // a*x + b*y + c = 0, gcd 1, sign-normalized
    // True if normalization negated the orient form cross(p_j - p_i, z - p_i).
    bool flipped = false;
    // Synthetic region boundaries are part of the subdivision but must not be
    // crossed by cell walks.
    bool crossable = true;

    // sign of a*x + b*y + c at a rational point
    int side(const RatPoint& p) const;
    int side(const BigInt& x, const BigInt& y) const;
};

ArrangementLine line_through(const ColoredPointSet& ps, int i, int j);

// Synthetic line a*x + b*y + c = 0 with no defining pair.
ArrangementLine synthetic_line(BigInt a, BigInt b, BigInt c, bool crossable);

class LineArrangement {
  public:
    // Curve ids < 0 denote the clip box sides.
    static constexpr int kBoxLeft = -1, kBoxRight = -2, kBoxBottom = -3, kBoxTop = -4;

    struct HalfEdge {
        int head = -1;   // target vertex
        int next = -1;   // CCW face successor
        int face = -1;
        int line = -1;   // arrangement line index, or -1 on the box boundary
        bool inside_segment = false;  // edge lies inside the defining pair's segment
    };

    std::vector<ArrangementLine> lines;
    std::vector<HalfEdge> half_edges;            // twin(h) == h ^ 1
    std::vector<std::pair<int, int>> vertex_defs;  // two curve ids, or (point marker, id)
    std::vector<int> face_edge;                  // one boundary half-edge per face
    int outer_face = -1;
    BigInt box;                                  // clip square [-box, box]^2

    int twin(int h) const { return h ^ 1; }
    int cell_count() const { return static_cast<int>(face_edge.size()) - 1; }
    int face_count() const { return static_cast<int>(face_edge.size()); }

    // Faces in discovery order skipping the outer face.
    std::vector<int> cells() const;

    // Exact coordinates of a vertex, recomputed from its defining curves.
    RatPoint vertex_point(int v) const;

    // An interior point of a bounded face: centroid of a strict corner and its
    // two cycle neighbors. Lies on no arrangement line.
    RatPoint face_sample(int face) const;

  private:
    friend LineArrangement build_arrangement(const ColoredPointSet& ps,
                                             std::vector<ArrangementLine> lines);
    const ColoredPointSet* parent_ = nullptr;

  public:
    const ColoredPointSet& parent() const { return *parent_; }
};

// Arrangement of all C(n,2) pair lines; requires a valid general-position
// set with n >= 2.
LineArrangement build_arrangement(const ColoredPointSet& ps);

// Arrangement of an explicit line set (deduped by coefficients).
LineArrangement build_arrangement(const ColoredPointSet& ps,
                                  std::vector<ArrangementLine> lines);

}  // namespace balis
