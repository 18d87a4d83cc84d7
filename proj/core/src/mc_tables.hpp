#pragma once

// Classic 256-case marching cubes lookup tables (Lorensen-Cline case table
// in Bourke's layout). Corner numbering:
//   0:(i,j,k)   1:(i+1,j,k)   2:(i+1,j+1,k)   3:(i,j+1,k)
//   4:(i,j,k+1) 5:(i+1,j,k+1) 6:(i+1,j+1,k+1) 7:(i,j+1,k+1)
// Edge e connects kMcEdgeCorners[e][0] to kMcEdgeCorners[e][1].

namespace mdf::detail {

extern const int kMcEdgeTable[256];
extern const int kMcTriTable[256][16];

inline constexpr int kMcEdgeCorners[12][2] = {
    {0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
    {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7},
};

inline constexpr int kMcCornerOffset[8][3] = {
    {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
    {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1},
};

}  // namespace mdf::detail
