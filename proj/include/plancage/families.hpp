#ifndef PLANCAGE_FAMILIES_HPP
#define PLANCAGE_FAMILIES_HPP

#include <string_view>

#include "plancage/graph.hpp"

namespace plancage {
namespace families {

enum class Platonic { tetrahedron, cube, octahedron, dodecahedron, icosahedron };

SimpleGraph platonic(Platonic which);
SimpleGraph platonic(std::string_view name);

/// l triangles sharing one vertex; order 2l+1, hub degree 2l, girth 3.
/// Labeling: hub 0, triangle i on {2i+1, 2i+2}.
SimpleGraph windmill(int l);

/// a triangles sharing one edge, indexed by apex count; order a+2,
/// two vertices of degree a+1, girth 3. Labeling: shared edge {0,1},
/// apexes 2..a+1.
SimpleGraph pinwheel(int a);

/// Rim cycle 1..m plus hub 0.
SimpleGraph wheel(int m);

/// Rim cycle 0..rim-1 plus two non-adjacent hubs rim, rim+1 joined to every
/// rim vertex; order rim+2.
SimpleGraph biwheel(int rim);

/// Two adjacent hubs 0,1 plus (m-1)/2 matched pairs joined to both hubs;
/// m odd >= 5; order m+1, degrees {3: m-1, m: 2}.
SimpleGraph double_windmill(int m);

/// Two m-cycles joined by an alternating double ladder, one hub inside each;
/// order 2m+2, degrees {5: 2m, m: 2}, girth 3. Labeling: hub 0, inner cycle
/// 1..m, hub m+1, outer cycle m+2..2m+1.
SimpleGraph family_I(int m);

/// 2m-cycle 0..2m-1, vertex 2m joined to the even positions and 2m+1 to the
/// odd ones; order 2m+2, girth 4.
SimpleGraph family_D(int m);

/// 8-cycle 0..7 plus apex 8 joined to 0, 2, 4; girth 4.
SimpleGraph gadget_F();

/// 8-cycle 0..7 plus the diameter chord {0,4}; girth 5.
SimpleGraph gadget_E4();

/// Chain of two gadget_F ends and k-2 gadget_E4 middles linked by length-2
/// paths, plus an apex joined to every degree-2 vertex; k >= 3; order 9k+2,
/// degrees {3: 9k+1, 5k-1: 1}, girth 4.
SimpleGraph family_Z(int k);

/// family_Z for k* = ceil((m+1)/5) with 5k*-1-m degree-2 vertices suppressed
/// in diametrically opposite pairs from the trailing gadget_E4 copies before
/// the apex is added; m > 14; order m + 4*ceil((m+1)/5) + 3.
SimpleGraph family_Z_general(int m);

/// Three concentric layers between a hub and an apex; order 6m+2,
/// degrees {3: 6m, m: 2}, girth 5; m >= 4.
SimpleGraph family_P(int m);

/// m internally disjoint pole-to-pole paths, m-1 of length ceil(g/2) and one
/// of length floor(g/2); order (m-1)*ceil((g-2)/2) + floor((g-2)/2) + 2,
/// girth g. Poles 0 and 1.
SimpleGraph family_O(int m, int g);

/// m/2 g-cycles sharing vertex 0; m even >= 4; order (m/2)(g-1)+1, girth g.
SimpleGraph family_F_cycles(int m, int g);

/// Complete bipartite K_{2,m}: poles 0,1, leaves 2..m+1; girth 4.
SimpleGraph k2m(int m);

}  // namespace families
}  // namespace plancage

#endif
