// Expected decoding-cell matrices for the shipped fixtures, transcribed by
// hand from the fixtures' decode behaviour: cell[client][i] is the message
// client recovers from transmission i under static decoding, -1 for none.
// example1 carries the two cells (C_6 and C_9 at W_4) in their
// side-information-consistent form.
#pragma once

#include <vector>

namespace golden {

using Cells = std::vector<std::vector<int>>;

// M=12, K=3; X_1, X_4, X_7, X_10 from C_0, C_3, C_6, C_9
inline const Cells example1_cells = {
    {-1, 4, 7, 10}, {1, -1, 7, 10}, {1, -1, 7, 10}, {1, -1, 7, 10},
    {1, 4, -1, 10}, {1, 4, -1, 10}, {1, 4, -1, 10}, {1, 4, 7, -1},
    {1, 4, 7, -1},  {1, 4, 7, -1},  {-1, 4, 7, 10}, {-1, 4, 7, 10},
};

// M=16, K=7; {X_1,X_7} from C_0, {X_4,X_10} from C_3
inline const Cells example3_cells = {
    {-1, 10}, {1, 10}, {1, 10}, {1, -1}, {1, 4},  {1, 4},  {1, 4},  {-1, 4},
    {-1, 4},  {-1, 4}, {7, -1}, {7, -1}, {7, -1}, {7, 10}, {7, 10}, {7, 10},
};

// M=16, K=7; pairs from C_0, C_3, C_6, C_9
inline const Cells example4_cells = {
    {-1, 10, 13, -1}, {1, 10, 13, -1}, {1, 10, 13, -1}, {1, -1, 13, 0},
    {1, 4, 13, 0},    {1, 4, 13, 0},   {1, 4, -1, 0},   {-1, 4, 7, 0},
    {-1, 4, 7, 0},    {-1, 4, 7, -1},  {7, -1, 7, 10},  {7, -1, 7, 10},
    {7, -1, 7, 10},   {7, 10, -1, 10}, {7, 10, -1, 10}, {7, 10, -1, 10},
};

// M=10, K=7; triples from C_0..C_3
inline const Cells example6_cells = {
    {-1, 8, 9, 0}, {1, -1, 9, 0}, {1, 2, -1, 0}, {1, 2, 3, -1}, {4, 2, 3, 4},
    {4, 5, 3, 4},  {4, 5, 6, 4},  {7, 5, 6, 7},  {7, 8, 6, 7},  {7, 8, 9, 7},
};

}  // namespace golden
