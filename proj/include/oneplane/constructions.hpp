#pragma once

// The extremal families: the crossed-diagonal K4 base, the two recursive
// gadget families H_k / M_k, and their hermit-augmented tight variants.

#include "oneplane/drawing.hpp"

namespace oneplane {

// K4 drawn as a 4-cycle with crossed diagonals: n=4, m=6, c=1,
// four false 3-faces and one true 4-face.  This is both H_1 and M_1.
Drawing gen_base();

// The six-vertex gadget with one crossing (eleven edges), drawn standalone.
Drawing gen_h_star();

// The five-vertex gadget with one crossing (eight edges), drawn standalone.
Drawing gen_m_star();

// H_k: insert the H* gadget into a false 3-face of H_{k-1}, identifying the
// gadget edge uv with the face's unique non-crossing edge.
// n = 4k, m = 10k-4, 2k+2 false 3-faces, maximal IC-plane.
Drawing gen_h(int k);

// M_k: same recursion with the M* gadget.
// n = 3k+1, m = 7k-1, 2k+2 false 3-faces, maximal NIC-plane.
Drawing gen_m(int k);

// Adds a degree-2 vertex inside a false 3-face, joined to the face's two
// vertices.  Replaces the face by one true 3-face and one false 4-face.
// Throws NotFalse3Face otherwise.
Drawing insert_hermit(const Drawing& d, int face);

// Hermits inserted into every false 3-face of H_k: n = 6k+2, m = 14k.
Drawing gen_h_prime(int k);

// Hermits inserted into every false 3-face of M_k: n = 5k+3, m = 11k+3.
Drawing gen_m_prime(int k);

}  // namespace oneplane
