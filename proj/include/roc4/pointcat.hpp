#pragma once

#include <string>
#include <vector>

#include "roc4/green.hpp"
#include "roc4/mackey.hpp"

namespace roc4 {

// One named summand of the point homology in a fixed degree, with the
// generator of each level in the a|b|c convention ("0" for a zero level).
struct PointPiece {
    NamedMF tag;
    std::string top_label, mid_label, bot_label;
    std::string abc() const { return top_label + "|" + mid_label + "|" + bot_label; }
};

struct PointAnswer {
    std::vector<PointPiece> pieces;  // deterministic table-row order
    std::vector<NamedMF> tags() const;
    std::array<std::size_t, 3> dims() const;  // top, mid, bot totals
    bool operator==(const PointAnswer& o) const;
};

// The homology of a point: k_star(S^0) as a sum of catalog functors.
PointAnswer expected_point(RODegree star);

// The C2 point ring dimension and generator at a + s*sigma_2.
struct C2PointAnswer {
    std::size_t dim = 0;
    std::string label;  // empty when dim = 0
};
C2PointAnswer expected_point_c2(C2Degree star2);

}  // namespace roc4
