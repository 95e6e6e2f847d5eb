#pragma once

// Embedded blocks of a Steiner system S(3,6,22), stored in the block-design
// text format. The 77 blocks arise from PG(2,4): the 21 lines extended by a
// 22nd point, plus one even-intersection class of 56 hyperovals. The data is
// self-certified at load: every 3-subset of the 22 points must lie in exactly
// one block, and the disjointness graph on the blocks must be SRG(77,16,0,4).

#include <string_view>

namespace tightsrg {

inline constexpr std::string_view kSteiner22BlockData =
    "22 77\n"
    "0 1 2 3 4 21\n"
    "0 1 5 10 16 19\n"
    "0 1 6 9 15 20\n"
    "0 1 7 12 14 17\n"
    "0 1 8 11 13 18\n"
    "0 2 5 9 14 18\n"
    "0 2 6 10 13 17\n"
    "0 2 7 11 16 20\n"
    "0 2 8 12 15 19\n"
    "0 3 5 12 13 20\n"
    "0 3 6 11 14 19\n"
    "0 3 7 10 15 18\n"
    "0 3 8 9 16 17\n"
    "0 4 5 11 15 17\n"
    "0 4 6 12 16 18\n"
    "0 4 7 9 13 19\n"
    "0 4 8 10 14 20\n"
    "0 5 6 7 8 21\n"
    "0 9 10 11 12 21\n"
    "0 13 14 15 16 21\n"
    "0 17 18 19 20 21\n"
    "1 2 5 6 11 12\n"
    "1 2 7 8 9 10\n"
    "1 2 13 14 19 20\n"
    "1 2 15 16 17 18\n"
    "1 3 5 8 14 15\n"
    "1 3 6 7 13 16\n"
    "1 3 9 12 18 19\n"
    "1 3 10 11 17 20\n"
    "1 4 5 7 18 20\n"
    "1 4 6 8 17 19\n"
    "1 4 9 11 14 16\n"
    "1 4 10 12 13 15\n"
    "1 5 9 13 17 21\n"
    "1 6 10 14 18 21\n"
    "1 7 11 15 19 21\n"
    "1 8 12 16 20 21\n"
    "2 3 5 7 17 19\n"
    "2 3 6 8 18 20\n"
    "2 3 9 11 13 15\n"
    "2 3 10 12 14 16\n"
    "2 4 5 8 13 16\n"
    "2 4 6 7 14 15\n"
    "2 4 9 12 17 20\n"
    "2 4 10 11 18 19\n"
    "2 5 10 15 20 21\n"
    "2 6 9 16 19 21\n"
    "2 7 12 13 18 21\n"
    "2 8 11 14 17 21\n"
    "3 4 5 6 9 10\n"
    "3 4 7 8 11 12\n"
    "3 4 13 14 17 18\n"
    "3 4 15 16 19 20\n"
    "3 5 11 16 18 21\n"
    "3 6 12 15 17 21\n"
    "3 7 9 14 20 21\n"
    "3 8 10 13 19 21\n"
    "4 5 12 14 19 21\n"
    "4 6 11 13 20 21\n"
    "4 7 10 16 17 21\n"
    "4 8 9 15 18 21\n"
    "5 6 13 15 18 19\n"
    "5 6 14 16 17 20\n"
    "5 7 9 12 15 16\n"
    "5 7 10 11 13 14\n"
    "5 8 9 11 19 20\n"
    "5 8 10 12 17 18\n"
    "6 7 9 11 17 18\n"
    "6 7 10 12 19 20\n"
    "6 8 9 12 13 14\n"
    "6 8 10 11 15 16\n"
    "7 8 13 15 17 20\n"
    "7 8 14 16 18 19\n"
    "9 10 13 16 18 20\n"
    "9 10 14 15 17 19\n"
    "11 12 13 16 17 19\n"
    "11 12 14 15 18 20\n";

}  // namespace tightsrg
