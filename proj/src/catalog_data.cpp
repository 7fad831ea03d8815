#include "nutkit/detail/catalog_data.hpp"

#include <iterator>

// Built-in catalog of d-regular nut graphs (d = 3..11) used as certification
// seeds.  The adjacency-list text is stored verbatim and parsed at load time
// so that any transcription error fails loudly.

namespace nutkit::detail {

namespace {

constexpr RawSeed kSeeds[] = {
    {3, 12,
     "{0: 1 2 3; 1: 0 4 5; 2: 0 6 7; 3: 0 8 9; 4: 1 6 8; 5: 1 7 9; 6: 2 4 10; 7: 2 5 11; 8: 3 4 11; 9: 3 5 10; 10: 6 9 11; 11: 7 8 10}"},
    {3, 20,
     "{0: 1 2 3; 1: 0 4 5; 2: 0 6 7; 3: 0 8 9; 4: 1 6 10; 5: 1 8 11; 6: 2 4 12; 7: 2 11 13; 8: 3 5 14; 9: 3 12 15; 10: 4 13 16; 11: 5 7 17; 12: 6 9 16; 13: 7 10 18; 14: 8 15 19; 15: 9 14 18; 16: 10 12 19; 17: 11 18 19; 18: 13 15 17; 19: 14 16 17}"},
    {3, 22,
     "{0: 9 14 15; 1: 10 16 18; 2: 11 13 14; 3: 11 13 15; 4: 12 18 21; 5: 12 20 21; 6: 15 16 17; 7: 16 19 20; 8: 17 19 20; 9: 0 14 19; 10: 1 17 18; 11: 2 3 13; 12: 4 5 21; 13: 2 3 11; 14: 0 2 9; 15: 0 3 6; 16: 1 6 7; 17: 6 8 10; 18: 1 4 10; 19: 7 8 9; 20: 5 7 8; 21: 4 5 12}"},
    {4, 8,
     "{0: 1 2 3 4; 1: 0 2 3 5; 2: 0 1 4 6; 3: 0 1 5 7; 4: 0 2 6 7; 5: 1 3 6 7; 6: 2 4 5 7; 7: 3 4 5 6}"},
    {4, 10,
     "{0: 1 2 3 4; 1: 0 2 3 5; 2: 0 1 4 6; 3: 0 1 5 7; 4: 0 2 6 8; 5: 1 3 7 9; 6: 2 4 8 9; 7: 3 5 8 9; 8: 4 6 7 9; 9: 5 6 7 8}"},
    {4, 12,
     "{0: 1 2 3 4; 1: 0 2 3 4; 2: 0 1 3 5; 3: 0 1 2 5; 4: 0 1 5 6; 5: 2 3 4 7; 6: 4 7 8 9; 7: 5 6 10 11; 8: 6 9 10 11; 9: 6 8 10 11; 10: 7 8 9 11; 11: 7 8 9 10}"},
    {4, 14,
     "{0: 1 2 3 4; 1: 0 2 3 4; 2: 0 1 3 5; 3: 0 1 2 5; 4: 0 1 5 6; 5: 2 3 4 7; 6: 4 8 9 10; 7: 5 8 9 10; 8: 6 7 11 12; 9: 6 7 11 13; 10: 6 7 12 13; 11: 8 9 12 13; 12: 8 10 11 13; 13: 9 10 11 12}"},
    {4, 15,
     "{0: 1 2 3 4; 1: 0 2 3 5; 2: 0 1 6 7; 3: 0 1 6 8; 4: 0 7 9 10; 5: 1 9 11 12; 6: 2 3 10 11; 7: 2 4 13 14; 8: 3 9 13 14; 9: 4 5 8 11; 10: 4 6 12 13; 11: 5 6 9 14; 12: 5 10 13 14; 13: 7 8 10 12; 14: 7 8 11 12}"},
    {4, 17,
     "{0: 1 2 3 4; 1: 0 2 3 4; 2: 0 1 3 5; 3: 0 1 2 6; 4: 0 1 5 7; 5: 2 4 6 8; 6: 3 5 9 10; 7: 4 9 11 12; 8: 5 11 13 14; 9: 6 7 10 13; 10: 6 9 14 15; 11: 7 8 12 16; 12: 7 11 13 16; 13: 8 9 12 15; 14: 8 10 15 16; 15: 10 13 14 16; 16: 11 12 14 15}"},
    {4, 19,
     "{0: 1 2 3 4; 1: 0 2 3 4; 2: 0 1 3 4; 3: 0 1 2 5; 4: 0 1 2 6; 5: 3 6 7 8; 6: 4 5 7 9; 7: 5 6 8 10; 8: 5 7 9 11; 9: 6 8 11 12; 10: 7 11 13 14; 11: 8 9 10 13; 12: 9 13 15 16; 13: 10 11 12 14; 14: 10 13 17 18; 15: 12 16 17 18; 16: 12 15 17 18; 17: 14 15 16 18; 18: 14 15 16 17}"},
    {4, 21,
     "{0: 1 2 3 4; 1: 0 2 3 5; 2: 0 1 6 7; 3: 0 1 8 9; 4: 0 6 10 11; 5: 1 10 12 13; 6: 2 4 14 15; 7: 2 12 14 16; 8: 3 12 16 17; 9: 3 13 14 18; 10: 4 5 16 19; 11: 4 15 18 19; 12: 5 7 8 15; 13: 5 9 18 20; 14: 6 7 9 18; 15: 6 11 12 20; 16: 7 8 10 17; 17: 8 16 19 20; 18: 9 11 13 14; 19: 10 11 17 20; 20: 13 15 17 19}"},
    {5, 10,
     "{0: 1 2 3 4 5; 1: 0 2 3 6 7; 2: 0 1 4 6 8; 3: 0 1 4 7 9; 4: 0 2 3 8 9; 5: 0 6 7 8 9; 6: 1 2 5 7 8; 7: 1 3 5 6 9; 8: 2 4 5 6 9; 9: 3 4 5 7 8}"},
    {5, 12,
     "{0: 1 2 3 4 5; 1: 0 2 3 4 6; 2: 0 1 5 7 8; 3: 0 1 6 9 10; 4: 0 1 7 9 11; 5: 0 2 8 9 10; 6: 1 3 7 8 10; 7: 2 4 6 9 11; 8: 2 5 6 10 11; 9: 3 4 5 7 11; 10: 3 5 6 8 11; 11: 4 7 8 9 10}"},
    {5, 14,
     "{0: 1 2 3 4 5; 1: 0 2 3 4 5; 2: 0 1 3 4 6; 3: 0 1 2 7 8; 4: 0 1 2 9 10; 5: 0 1 6 11 12; 6: 2 5 7 8 9; 7: 3 6 8 9 13; 8: 3 6 7 11 12; 9: 4 6 7 10 13; 10: 4 9 11 12 13; 11: 5 8 10 12 13; 12: 5 8 10 11 13; 13: 7 9 10 11 12}"},
    {5, 16,
     "{0: 1 2 3 4 5; 1: 0 2 3 4 5; 2: 0 1 3 4 5; 3: 0 1 2 4 6; 4: 0 1 2 3 7; 5: 0 1 2 8 9; 6: 3 7 8 10 11; 7: 4 6 12 13 14; 8: 5 6 9 10 12; 9: 5 8 10 12 15; 10: 6 8 9 11 15; 11: 6 10 13 14 15; 12: 7 8 9 13 14; 13: 7 11 12 14 15; 14: 7 11 12 13 15; 15: 9 10 11 13 14}"},
    {5, 18,
     "{0: 1 2 3 4 5; 1: 0 2 3 4 5; 2: 0 1 3 4 5; 3: 0 1 2 4 6; 4: 0 1 2 3 6; 5: 0 1 2 7 8; 6: 3 4 9 10 11; 7: 5 9 10 11 12; 8: 5 9 10 13 14; 9: 6 7 8 10 13; 10: 6 7 8 9 13; 11: 6 7 12 15 16; 12: 7 11 15 16 17; 13: 8 9 10 14 17; 14: 8 13 15 16 17; 15: 11 12 14 16 17; 16: 11 12 14 15 17; 17: 12 13 14 15 16}"},
    {6, 12,
     "{0: 1 2 3 4 5 6; 1: 0 2 3 4 7 8; 2: 0 1 5 7 9 10; 3: 0 1 5 8 9 11; 4: 0 1 6 7 9 11; 5: 0 2 3 6 10 11; 6: 0 4 5 8 9 10; 7: 1 2 4 8 10 11; 8: 1 3 6 7 9 10; 9: 2 3 4 6 8 11; 10: 2 5 6 7 8 11; 11: 3 4 5 7 9 10}"},
    {6, 13,
     "{0: 1 2 3 4 5 6; 1: 0 2 3 4 5 7; 2: 0 1 3 4 8 9; 3: 0 1 2 6 10 11; 4: 0 1 2 8 10 12; 5: 0 1 6 7 11 12; 6: 0 3 5 7 8 9; 7: 1 5 6 9 10 11; 8: 2 4 6 9 10 12; 9: 2 6 7 8 11 12; 10: 3 4 7 8 11 12; 11: 3 5 7 9 10 12; 12: 4 5 8 9 10 11}"},
    {6, 14,
     "{0: 1 2 3 4 5 6; 1: 0 2 3 4 5 6; 2: 0 1 3 4 5 7; 3: 0 1 2 6 8 9; 4: 0 1 2 7 10 11; 5: 0 1 2 8 9 10; 6: 0 1 3 8 11 12; 7: 2 4 8 10 11 13; 8: 3 5 6 7 12 13; 9: 3 5 10 11 12 13; 10: 4 5 7 9 12 13; 11: 4 6 7 9 12 13; 12: 6 8 9 10 11 13; 13: 7 8 9 10 11 12}"},
    {6, 15,
     "{0: 1 2 3 4 5 6; 1: 0 2 3 4 5 6; 2: 0 1 3 4 5 7; 3: 0 1 2 4 5 8; 4: 0 1 2 3 7 9; 5: 0 1 2 3 10 11; 6: 0 1 10 12 13 14; 7: 2 4 9 12 13 14; 8: 3 9 10 11 12 13; 9: 4 7 8 11 12 14; 10: 5 6 8 11 12 13; 11: 5 8 9 10 13 14; 12: 6 7 8 9 10 14; 13: 6 7 8 10 11 14; 14: 6 7 9 11 12 13}"},
    {6, 16,
     "{0: 1 2 3 4 5 6; 1: 0 2 3 4 5 6; 2: 0 1 3 4 5 6; 3: 0 1 2 4 5 7; 4: 0 1 2 3 7 8; 5: 0 1 2 3 9 10; 6: 0 1 2 7 9 11; 7: 3 4 6 8 12 13; 8: 4 7 11 12 14 15; 9: 5 6 10 11 14 15; 10: 5 9 11 12 13 14; 11: 6 8 9 10 13 15; 12: 7 8 10 13 14 15; 13: 7 10 11 12 14 15; 14: 8 9 10 12 13 15; 15: 8 9 11 12 13 14}"},
    {6, 17,
     "{0: 1 2 3 4 5 6; 1: 0 2 3 4 5 6; 2: 0 1 3 4 5 6; 3: 0 1 2 4 5 6; 4: 0 1 2 3 7 8; 5: 0 1 2 3 7 9; 6: 0 1 2 3 10 11; 7: 4 5 10 12 13 14; 8: 4 9 11 12 15 16; 9: 5 8 13 14 15 16; 10: 6 7 11 13 15 16; 11: 6 8 10 14 15 16; 12: 7 8 13 14 15 16; 13: 7 9 10 12 14 15; 14: 7 9 11 12 13 16; 15: 8 9 10 11 12 13; 16: 8 9 10 11 12 14}"},
    {6, 18,
     "{0: 1 2 3 4 5 6; 1: 0 2 3 4 5 6; 2: 0 1 3 4 5 6; 3: 0 1 2 4 5 6; 4: 0 1 2 3 5 7; 5: 0 1 2 3 4 7; 6: 0 1 2 3 8 9; 7: 4 5 8 9 10 11; 8: 6 7 10 12 13 14; 9: 6 7 12 13 15 16; 10: 7 8 11 14 15 17; 11: 7 10 12 13 14 16; 12: 8 9 11 14 16 17; 13: 8 9 11 15 16 17; 14: 8 10 11 12 15 17; 15: 9 10 13 14 16 17; 16: 9 11 12 13 15 17; 17: 10 12 13 14 15 16}"},
    {6, 19,
     "{0: 1 2 3 4 5 6; 1: 0 2 3 4 5 6; 2: 0 1 3 4 5 6; 3: 0 1 2 4 5 6; 4: 0 1 2 3 5 6; 5: 0 1 2 3 4 7; 6: 0 1 2 3 4 8; 7: 5 8 9 10 11 12; 8: 6 7 9 10 13 14; 9: 7 8 10 11 12 15; 10: 7 8 9 13 16 17; 11: 7 9 12 14 15 16; 12: 7 9 11 15 17 18; 13: 8 10 14 16 17 18; 14: 8 11 13 15 16 18; 15: 9 11 12 14 17 18; 16: 10 11 13 14 17 18; 17: 10 12 13 15 16 18; 18: 12 13 14 15 16 17}"},
    {6, 20,
     "{0: 1 2 3 4 5 6; 1: 0 2 3 4 5 6; 2: 0 1 3 4 5 6; 3: 0 1 2 4 7 8; 4: 0 1 2 3 7 9; 5: 0 1 2 6 7 8; 6: 0 1 2 5 7 9; 7: 3 4 5 6 8 10; 8: 3 5 7 9 10 11; 9: 4 6 8 10 11 12; 10: 7 8 9 12 13 14; 11: 8 9 12 13 14 15; 12: 9 10 11 16 17 18; 13: 10 11 15 16 17 19; 14: 10 11 15 16 18 19; 15: 11 13 14 17 18 19; 16: 12 13 14 17 18 19; 17: 12 13 15 16 18 19; 18: 12 14 15 16 17 19; 19: 13 14 15 16 17 18}"},
    {6, 21,
     "{0: 1 2 3 4 5 6; 1: 0 2 3 4 5 6; 2: 0 1 3 4 5 6; 3: 0 1 2 4 7 8; 4: 0 1 2 3 7 9; 5: 0 1 2 6 7 8; 6: 0 1 2 5 7 9; 7: 3 4 5 6 8 9; 8: 3 5 7 9 10 11; 9: 4 6 7 8 10 11; 10: 8 9 12 13 14 15; 11: 8 9 16 17 18 19; 12: 10 13 14 15 16 17; 13: 10 12 14 16 18 20; 14: 10 12 13 18 19 20; 15: 10 12 16 17 19 20; 16: 11 12 13 15 17 19; 17: 11 12 15 16 18 20; 18: 11 13 14 17 19 20; 19: 11 14 15 16 18 20; 20: 13 14 15 17 18 19}"},
    {6, 22,
     "{0: 1 2 3 4 5 6; 1: 0 2 3 4 5 6; 2: 0 1 3 4 5 6; 3: 0 1 2 4 7 8; 4: 0 1 2 3 7 9; 5: 0 1 2 6 7 8; 6: 0 1 2 5 7 9; 7: 3 4 5 6 8 9; 8: 3 5 7 9 10 11; 9: 4 6 7 8 10 11; 10: 8 9 11 12 13 14; 11: 8 9 10 12 15 16; 12: 10 11 13 17 18 19; 13: 10 12 15 16 20 21; 14: 10 15 17 18 20 21; 15: 11 13 14 16 17 20; 16: 11 13 15 17 19 21; 17: 12 14 15 16 18 19; 18: 12 14 17 19 20 21; 19: 12 16 17 18 20 21; 20: 13 14 15 18 19 21; 21: 13 14 16 18 19 20}"},
    {6, 23,
     "{0: 1 2 3 4 5 6; 1: 0 2 3 4 5 6; 2: 0 1 3 4 5 6; 3: 0 1 2 4 7 8; 4: 0 1 2 3 7 9; 5: 0 1 2 6 7 8; 6: 0 1 2 5 7 9; 7: 3 4 5 6 8 9; 8: 3 5 7 9 10 11; 9: 4 6 7 8 10 11; 10: 8 9 11 12 13 14; 11: 8 9 10 12 13 15; 12: 10 11 13 14 16 17; 13: 10 11 12 15 16 18; 14: 10 12 15 17 18 19; 15: 11 13 14 17 20 21; 16: 12 13 17 20 21 22; 17: 12 14 15 16 19 22; 18: 13 14 19 20 21 22; 19: 14 17 18 20 21 22; 20: 15 16 18 19 21 22; 21: 15 16 18 19 20 22; 22: 16 17 18 19 20 21}"},
    {7, 12,
     "{0: 1 2 3 4 5 6 7; 1: 0 2 3 4 5 8 9; 2: 0 1 3 4 6 10 11; 3: 0 1 2 5 8 10 11; 4: 0 1 2 7 8 9 10; 5: 0 1 3 6 7 9 11; 6: 0 2 5 7 9 10 11; 7: 0 4 5 6 8 9 10; 8: 1 3 4 7 9 10 11; 9: 1 4 5 6 7 8 11; 10: 2 3 4 6 7 8 11; 11: 2 3 5 6 8 9 10}"},
    {7, 14,
     "{0: 1 2 3 4 5 6 7; 1: 0 2 3 4 5 6 7; 2: 0 1 3 4 5 8 9; 3: 0 1 2 4 5 8 10; 4: 0 1 2 3 6 9 11; 5: 0 1 2 3 11 12 13; 6: 0 1 4 9 10 12 13; 7: 0 1 8 10 11 12 13; 8: 2 3 7 9 10 11 12; 9: 2 4 6 8 10 12 13; 10: 3 6 7 8 9 11 13; 11: 4 5 7 8 10 12 13; 12: 5 6 7 8 9 11 13; 13: 5 6 7 9 10 11 12}"},
    {7, 16,
     "{0: 1 2 3 4 5 6 7; 1: 0 2 3 4 5 6 7; 2: 0 1 3 4 5 6 7; 3: 0 1 2 4 5 6 8; 4: 0 1 2 3 7 9 10; 5: 0 1 2 3 8 9 11; 6: 0 1 2 3 8 12 13; 7: 0 1 2 4 10 11 12; 8: 3 5 6 11 13 14 15; 9: 4 5 11 12 13 14 15; 10: 4 7 11 12 13 14 15; 11: 5 7 8 9 10 14 15; 12: 6 7 9 10 13 14 15; 13: 6 8 9 10 12 14 15; 14: 8 9 10 11 12 13 15; 15: 8 9 10 11 12 13 14}"},
    {7, 18,
     "{0: 1 2 3 4 5 6 7; 1: 0 2 3 4 5 6 7; 2: 0 1 3 4 5 6 7; 3: 0 1 2 4 5 6 7; 4: 0 1 2 3 5 6 8; 5: 0 1 2 3 4 7 9; 6: 0 1 2 3 4 8 10; 7: 0 1 2 3 5 9 11; 8: 4 6 10 11 12 13 14; 9: 5 7 11 12 13 15 16; 10: 6 8 11 14 15 16 17; 11: 7 8 9 10 12 15 17; 12: 8 9 11 13 14 16 17; 13: 8 9 12 14 15 16 17; 14: 8 10 12 13 15 16 17; 15: 9 10 11 13 14 16 17; 16: 9 10 12 13 14 15 17; 17: 10 11 12 13 14 15 16}"},
    {7, 20,
     "{0: 1 2 3 4 5 6 7; 1: 0 2 3 4 5 6 7; 2: 0 1 3 4 5 6 7; 3: 0 1 2 4 5 6 7; 4: 0 1 2 3 5 6 7; 5: 0 1 2 3 4 6 8; 6: 0 1 2 3 4 5 8; 7: 0 1 2 3 4 8 9; 8: 5 6 7 10 11 12 13; 9: 7 10 14 15 16 17 18; 10: 8 9 11 12 14 15 19; 11: 8 10 12 13 14 15 19; 12: 8 10 11 16 17 18 19; 13: 8 11 14 15 16 17 18; 14: 9 10 11 13 15 16 17; 15: 9 10 11 13 14 18 19; 16: 9 12 13 14 17 18 19; 17: 9 12 13 14 16 18 19; 18: 9 12 13 15 16 17 19; 19: 10 11 12 15 16 17 18}"},
    {7, 22,
     "{0: 1 2 3 4 5 6 7; 1: 0 2 3 4 5 6 7; 2: 0 1 3 4 5 6 8; 3: 0 1 2 4 7 8 9; 4: 0 1 2 3 10 11 12; 5: 0 1 2 6 7 8 9; 6: 0 1 2 5 10 11 12; 7: 0 1 3 5 8 9 10; 8: 2 3 5 7 9 10 11; 9: 3 5 7 8 10 12 13; 10: 4 6 7 8 9 13 14; 11: 4 6 8 15 16 17 18; 12: 4 6 9 13 14 15 19; 13: 9 10 12 16 19 20 21; 14: 10 12 15 16 17 18 20; 15: 11 12 14 16 17 19 21; 16: 11 13 14 15 18 20 21; 17: 11 14 15 18 19 20 21; 18: 11 14 16 17 19 20 21; 19: 12 13 15 17 18 20 21; 20: 13 14 16 17 18 19 21; 21: 13 15 16 17 18 19 20}"},
    {7, 24,
     "{0: 1 2 3 4 5 8 9; 1: 0 2 3 4 5 10 11; 2: 0 1 5 6 7 12 13; 3: 0 1 4 6 7 14 15; 4: 0 1 3 6 7 16 17; 5: 0 1 2 6 7 18 19; 6: 2 3 4 5 7 22 23; 7: 2 3 4 5 6 20 21; 8: 0 9 16 18 20 22 23; 9: 0 8 17 19 21 22 23; 10: 1 11 12 14 20 21 22; 11: 1 10 13 15 20 21 23; 12: 2 10 13 14 16 17 22; 13: 2 11 12 15 16 17 23; 14: 3 10 12 15 18 19 22; 15: 3 11 13 14 18 19 23; 16: 4 8 12 13 17 18 20; 17: 4 9 12 13 16 19 21; 18: 5 8 14 15 16 19 20; 19: 5 9 14 15 17 18 21; 20: 7 8 10 11 16 18 21; 21: 7 9 10 11 17 19 20; 22: 6 8 9 10 12 14 23; 23: 6 8 9 11 13 15 22}"},
    {8, 12,
     "{0: 1 2 3 4 5 6 7 8; 1: 0 2 3 4 5 6 7 9; 2: 0 1 3 4 5 8 9 10; 3: 0 1 2 4 6 8 10 11; 4: 0 1 2 3 7 9 10 11; 5: 0 1 2 6 7 8 10 11; 6: 0 1 3 5 7 9 10 11; 7: 0 1 4 5 6 8 9 11; 8: 0 2 3 5 7 9 10 11; 9: 1 2 4 6 7 8 10 11; 10: 2 3 4 5 6 8 9 11; 11: 3 4 5 6 7 8 9 10}"},
    {8, 14,
     "{0: 1 2 3 4 5 6 7 8; 1: 0 2 3 4 5 6 7 8; 2: 0 1 3 4 5 6 9 10; 3: 0 1 2 4 5 11 12 13; 4: 0 1 2 3 7 8 9 11; 5: 0 1 2 3 9 10 11 12; 6: 0 1 2 7 10 11 12 13; 7: 0 1 4 6 9 10 12 13; 8: 0 1 4 9 10 11 12 13; 9: 2 4 5 7 8 10 11 13; 10: 2 5 6 7 8 9 12 13; 11: 3 4 5 6 8 9 12 13; 12: 3 5 6 7 8 10 11 13; 13: 3 6 7 8 9 10 11 12}"},
    {8, 15,
     "{0: 1 2 3 4 5 6 7 8; 1: 0 2 3 4 5 6 7 8; 2: 0 1 3 4 5 6 7 9; 3: 0 1 2 4 5 6 8 10; 4: 0 1 2 3 5 9 11 12; 5: 0 1 2 3 4 9 11 13; 6: 0 1 2 3 10 11 12 14; 7: 0 1 2 10 11 12 13 14; 8: 0 1 3 9 10 12 13 14; 9: 2 4 5 8 10 12 13 14; 10: 3 6 7 8 9 11 13 14; 11: 4 5 6 7 10 12 13 14; 12: 4 6 7 8 9 11 13 14; 13: 5 7 8 9 10 11 12 14; 14: 6 7 8 9 10 11 12 13}"},
    {8, 16,
     "{0: 1 2 3 4 5 6 7 8; 1: 0 2 3 4 5 6 7 8; 2: 0 1 3 4 5 6 7 8; 3: 0 1 2 4 5 6 7 9; 4: 0 1 2 3 5 9 10 11; 5: 0 1 2 3 4 12 13 14; 6: 0 1 2 3 10 12 13 15; 7: 0 1 2 3 10 12 14 15; 8: 0 1 2 9 11 13 14 15; 9: 3 4 8 10 11 12 13 15; 10: 4 6 7 9 11 12 13 14; 11: 4 8 9 10 12 13 14 15; 12: 5 6 7 9 10 11 14 15; 13: 5 6 8 9 10 11 14 15; 14: 5 7 8 10 11 12 13 15; 15: 6 7 8 9 11 12 13 14}"},
    {8, 17,
     "{0: 1 2 3 4 5 6 7 8; 1: 0 2 3 4 5 6 7 8; 2: 0 1 3 4 5 6 7 8; 3: 0 1 2 4 5 6 7 8; 4: 0 1 2 3 5 6 9 10; 5: 0 1 2 3 4 9 11 12; 6: 0 1 2 3 4 10 13 14; 7: 0 1 2 3 9 13 15 16; 8: 0 1 2 3 11 12 13 15; 9: 4 5 7 10 11 13 14 16; 10: 4 6 9 11 12 14 15 16; 11: 5 8 9 10 12 14 15 16; 12: 5 8 10 11 13 14 15 16; 13: 6 7 8 9 12 14 15 16; 14: 6 9 10 11 12 13 15 16; 15: 7 8 10 11 12 13 14 16; 16: 7 9 10 11 12 13 14 15}"},
    {8, 18,
     "{0: 1 2 3 4 5 6 7 8; 1: 0 2 3 4 5 6 7 8; 2: 0 1 3 4 5 6 7 8; 3: 0 1 2 4 5 6 7 8; 4: 0 1 2 3 5 6 7 9; 5: 0 1 2 3 4 6 9 10; 6: 0 1 2 3 4 5 11 12; 7: 0 1 2 3 4 9 13 14; 8: 0 1 2 3 9 13 15 16; 9: 4 5 7 8 10 11 15 17; 10: 5 9 11 12 14 15 16 17; 11: 6 9 10 12 13 14 16 17; 12: 6 10 11 13 14 15 16 17; 13: 7 8 11 12 14 15 16 17; 14: 7 10 11 12 13 15 16 17; 15: 8 9 10 12 13 14 16 17; 16: 8 10 11 12 13 14 15 17; 17: 9 10 11 12 13 14 15 16}"},
    {8, 19,
     "{0: 1 2 3 4 5 6 7 8; 1: 0 2 3 4 5 6 7 8; 2: 0 1 3 4 5 6 7 8; 3: 0 1 2 4 5 6 7 8; 4: 0 1 2 3 5 6 7 8; 5: 0 1 2 3 4 9 10 11; 6: 0 1 2 3 4 9 12 13; 7: 0 1 2 3 4 10 14 15; 8: 0 1 2 3 4 12 16 17; 9: 5 6 10 11 14 15 16 17; 10: 5 7 9 11 12 14 15 18; 11: 5 9 10 12 13 16 17 18; 12: 6 8 10 11 13 14 16 18; 13: 6 11 12 14 15 16 17 18; 14: 7 9 10 12 13 15 17 18; 15: 7 9 10 13 14 16 17 18; 16: 8 9 11 12 13 15 17 18; 17: 8 9 11 13 14 15 16 18; 18: 10 11 12 13 14 15 16 17}"},
    {8, 20,
     "{0: 1 2 3 4 5 6 7 8; 1: 0 2 3 4 5 6 7 8; 2: 0 1 3 4 5 6 7 8; 3: 0 1 2 4 5 6 7 8; 4: 0 1 2 3 5 6 7 8; 5: 0 1 2 3 4 6 7 8; 6: 0 1 2 3 4 5 9 10; 7: 0 1 2 3 4 5 9 11; 8: 0 1 2 3 4 5 12 13; 9: 6 7 10 11 12 14 15 16; 10: 6 9 12 13 14 15 17 18; 11: 7 9 13 14 15 16 17 19; 12: 8 9 10 14 16 17 18 19; 13: 8 10 11 15 16 17 18 19; 14: 9 10 11 12 16 17 18 19; 15: 9 10 11 13 16 17 18 19; 16: 9 11 12 13 14 15 18 19; 17: 10 11 12 13 14 15 18 19; 18: 10 12 13 14 15 16 17 19; 19: 11 12 13 14 15 16 17 18}"},
    {8, 21,
     "{0: 1 2 3 4 5 6 7 8; 1: 0 2 3 4 5 6 7 8; 2: 0 1 3 4 5 6 7 8; 3: 0 1 2 4 5 6 7 8; 4: 0 1 2 3 5 6 7 8; 5: 0 1 2 3 4 6 9 10; 6: 0 1 2 3 4 5 9 11; 7: 0 1 2 3 4 8 9 10; 8: 0 1 2 3 4 7 9 11; 9: 5 6 7 8 12 13 14 15; 10: 5 7 12 13 16 17 18 19; 11: 6 8 12 14 16 17 18 20; 12: 9 10 11 15 16 17 19 20; 13: 9 10 14 15 16 18 19 20; 14: 9 11 13 15 16 18 19 20; 15: 9 12 13 14 17 18 19 20; 16: 10 11 12 13 14 17 19 20; 17: 10 11 12 15 16 18 19 20; 18: 10 11 13 14 15 17 19 20; 19: 10 12 13 14 15 16 17 18; 20: 11 12 13 14 15 16 17 18}"},
    {8, 22,
     "{0: 1 2 3 4 5 6 7 8; 1: 0 2 3 4 5 6 7 8; 2: 0 1 3 4 5 6 7 8; 3: 0 1 2 4 5 6 7 8; 4: 0 1 2 3 5 6 7 8; 5: 0 1 2 3 4 6 9 10; 6: 0 1 2 3 4 5 9 11; 7: 0 1 2 3 4 8 9 10; 8: 0 1 2 3 4 7 9 11; 9: 5 6 7 8 10 11 12 13; 10: 5 7 9 11 12 13 14 15; 11: 6 8 9 10 12 14 16 17; 12: 9 10 11 13 15 18 19 20; 13: 9 10 12 14 16 18 19 21; 14: 10 11 13 15 17 18 20 21; 15: 10 12 14 16 17 19 20 21; 16: 11 13 15 17 18 19 20 21; 17: 11 14 15 16 18 19 20 21; 18: 12 13 14 16 17 19 20 21; 19: 12 13 15 16 17 18 20 21; 20: 12 14 15 16 17 18 19 21; 21: 13 14 15 16 17 18 19 20}"},
    {8, 23,
     "{0: 1 2 3 4 5 6 7 8; 1: 0 2 3 4 5 6 7 8; 2: 0 1 3 4 5 6 7 8; 3: 0 1 2 4 5 6 7 8; 4: 0 1 2 3 5 6 7 8; 5: 0 1 2 3 4 6 9 10; 6: 0 1 2 3 4 5 9 11; 7: 0 1 2 3 4 8 9 10; 8: 0 1 2 3 4 7 9 11; 9: 5 6 7 8 10 11 12 13; 10: 5 7 9 11 12 13 14 15; 11: 6 8 9 10 12 13 14 15; 12: 9 10 11 13 14 15 16 17; 13: 9 10 11 12 16 18 19 20; 14: 10 11 12 15 17 18 21 22; 15: 10 11 12 14 19 20 21 22; 16: 12 13 17 18 19 20 21 22; 17: 12 14 16 18 19 20 21 22; 18: 13 14 16 17 19 20 21 22; 19: 13 15 16 17 18 20 21 22; 20: 13 15 16 17 18 19 21 22; 21: 14 15 16 17 18 19 20 22; 22: 14 15 16 17 18 19 20 21}"},
    {8, 24,
     "{0: 1 2 3 4 5 6 7 8; 1: 0 2 3 4 5 6 7 8; 2: 0 1 3 4 5 6 7 8; 3: 0 1 2 4 5 6 7 8; 4: 0 1 2 3 5 6 7 8; 5: 0 1 2 3 4 6 9 10; 6: 0 1 2 3 4 5 9 11; 7: 0 1 2 3 4 8 9 10; 8: 0 1 2 3 4 7 9 11; 9: 5 6 7 8 10 11 12 13; 10: 5 7 9 11 12 13 14 15; 11: 6 8 9 10 12 13 14 15; 12: 9 10 11 13 14 15 16 17; 13: 9 10 11 12 14 16 17 18; 14: 10 11 12 13 15 19 20 21; 15: 10 11 12 14 16 19 22 23; 16: 12 13 15 18 20 21 22 23; 17: 12 13 18 19 20 21 22 23; 18: 13 16 17 19 20 21 22 23; 19: 14 15 17 18 20 21 22 23; 20: 14 16 17 18 19 21 22 23; 21: 14 16 17 18 19 20 22 23; 22: 15 16 17 18 19 20 21 23; 23: 15 16 17 18 19 20 21 22}"},
    {8, 25,
     "{0: 1 2 3 4 5 6 7 8; 1: 0 2 3 4 5 6 7 8; 2: 0 1 3 4 5 6 7 8; 3: 0 1 2 4 5 6 7 8; 4: 0 1 2 3 5 6 7 8; 5: 0 1 2 3 4 6 9 10; 6: 0 1 2 3 4 5 9 11; 7: 0 1 2 3 4 8 9 10; 8: 0 1 2 3 4 7 9 11; 9: 5 6 7 8 10 11 12 13; 10: 5 7 9 11 12 13 14 15; 11: 6 8 9 10 12 13 14 15; 12: 9 10 11 13 14 15 16 17; 13: 9 10 11 12 14 15 18 19; 14: 10 11 12 13 16 17 20 21; 15: 10 11 12 13 16 20 22 23; 16: 12 14 15 18 19 21 22 24; 17: 12 14 18 20 21 22 23 24; 18: 13 16 17 19 21 22 23 24; 19: 13 16 18 20 21 22 23 24; 20: 14 15 17 19 21 22 23 24; 21: 14 16 17 18 19 20 23 24; 22: 15 16 17 18 19 20 23 24; 23: 15 17 18 19 20 21 22 24; 24: 16 17 18 19 20 21 22 23}"},
    {8, 26,
     "{0: 1 2 3 4 5 6 7 8; 1: 0 2 3 4 5 6 7 8; 2: 0 1 3 4 5 6 7 8; 3: 0 1 2 4 5 6 9 10; 4: 0 1 2 3 5 9 11 12; 5: 0 1 2 3 4 11 12 13; 6: 0 1 2 3 11 14 15 16; 7: 0 1 2 8 9 10 11 12; 8: 0 1 2 7 9 10 11 12; 9: 3 4 7 8 10 11 12 13; 10: 3 7 8 9 11 12 13 14; 11: 4 5 6 7 8 9 10 12; 12: 4 5 7 8 9 10 11 13; 13: 5 9 10 12 14 15 16 17; 14: 6 10 13 15 16 17 18 19; 15: 6 13 14 16 17 18 19 20; 16: 6 13 14 15 18 21 22 23; 17: 13 14 15 19 21 22 24 25; 18: 14 15 16 20 21 23 24 25; 19: 14 15 17 20 22 23 24 25; 20: 15 18 19 21 22 23 24 25; 21: 16 17 18 20 22 23 24 25; 22: 16 17 19 20 21 23 24 25; 23: 16 18 19 20 21 22 24 25; 24: 17 18 19 20 21 22 23 25; 25: 17 18 19 20 21 22 23 24}"},
    {8, 27,
     "{0: 1 2 3 4 5 6 7 8; 1: 0 2 3 4 5 6 7 8; 2: 0 1 3 4 5 6 7 8; 3: 0 1 2 4 5 6 7 8; 4: 0 1 2 3 5 6 7 8; 5: 0 1 2 3 4 6 9 10; 6: 0 1 2 3 4 5 9 11; 7: 0 1 2 3 4 8 9 10; 8: 0 1 2 3 4 7 9 11; 9: 5 6 7 8 10 11 12 13; 10: 5 7 9 11 12 13 14 15; 11: 6 8 9 10 12 13 14 15; 12: 9 10 11 13 14 15 16 17; 13: 9 10 11 12 14 15 16 17; 14: 10 11 12 13 15 16 17 18; 15: 10 11 12 13 14 16 18 19; 16: 12 13 14 15 17 20 21 22; 17: 12 13 14 16 18 19 20 23; 18: 14 15 17 19 23 24 25 26; 19: 15 17 18 21 22 24 25 26; 20: 16 17 21 22 23 24 25 26; 21: 16 19 20 22 23 24 25 26; 22: 16 19 20 21 23 24 25 26; 23: 17 18 20 21 22 24 25 26; 24: 18 19 20 21 22 23 25 26; 25: 18 19 20 21 22 23 24 26; 26: 18 19 20 21 22 23 24 25}"},
    {8, 29,
     "{0: 1 2 3 4 5 6 7 8; 1: 0 2 3 4 5 6 7 8; 2: 0 1 3 4 5 6 7 8; 3: 0 1 2 4 5 6 7 8; 4: 0 1 2 3 5 6 9 10; 5: 0 1 2 3 4 7 9 10; 6: 0 1 2 3 4 9 10 11; 7: 0 1 2 3 5 9 12 13; 8: 0 1 2 3 9 11 12 14; 9: 4 5 6 7 8 10 11 12; 10: 4 5 6 9 11 12 13 14; 11: 6 8 9 10 12 13 14 15; 12: 7 8 9 10 11 13 14 15; 13: 7 10 11 12 14 15 16 17; 14: 8 10 11 12 13 15 16 17; 15: 11 12 13 14 16 17 18 19; 16: 13 14 15 17 18 19 20 21; 17: 13 14 15 16 18 19 20 22; 18: 15 16 17 21 22 23 24 25; 19: 15 16 17 23 24 26 27 28; 20: 16 17 21 23 25 26 27 28; 21: 16 18 20 22 23 24 25 26; 22: 17 18 21 23 24 25 27 28; 23: 18 19 20 21 22 26 27 28; 24: 18 19 21 22 25 26 27 28; 25: 18 20 21 22 24 26 27 28; 26: 19 20 21 23 24 25 27 28; 27: 19 20 22 23 24 25 26 28; 28: 19 20 22 23 24 25 26 27}"},
    {9, 16,
     "{0: 1 2 3 4 5 6 7 8 9; 1: 0 2 3 4 5 6 7 8 9; 2: 0 1 3 4 5 6 7 8 9; 3: 0 1 2 4 5 6 7 10 11; 4: 0 1 2 3 5 8 10 12 13; 5: 0 1 2 3 4 11 12 13 14; 6: 0 1 2 3 9 11 12 14 15; 7: 0 1 2 3 10 11 12 13 15; 8: 0 1 2 4 9 10 13 14 15; 9: 0 1 2 6 8 11 13 14 15; 10: 3 4 7 8 11 12 13 14 15; 11: 3 5 6 7 9 10 12 14 15; 12: 4 5 6 7 10 11 13 14 15; 13: 4 5 7 8 9 10 12 14 15; 14: 5 6 8 9 10 11 12 13 15; 15: 6 7 8 9 10 11 12 13 14}"},
    {9, 18,
     "{0: 1 2 3 4 5 6 7 8 9; 1: 0 2 3 4 5 6 7 8 9; 2: 0 1 3 4 5 6 7 8 9; 3: 0 1 2 4 5 6 7 8 9; 4: 0 1 2 3 5 6 7 8 10; 5: 0 1 2 3 4 6 11 12 13; 6: 0 1 2 3 4 5 14 15 16; 7: 0 1 2 3 4 10 11 14 17; 8: 0 1 2 3 4 11 12 15 16; 9: 0 1 2 3 10 11 12 13 17; 10: 4 7 9 12 13 14 15 16 17; 11: 5 7 8 9 13 14 15 16 17; 12: 5 8 9 10 13 14 15 16 17; 13: 5 9 10 11 12 14 15 16 17; 14: 6 7 10 11 12 13 15 16 17; 15: 6 8 10 11 12 13 14 16 17; 16: 6 8 10 11 12 13 14 15 17; 17: 7 9 10 11 12 13 14 15 16}"},
    {9, 20,
     "{0: 1 2 3 4 5 6 7 8 9; 1: 0 2 3 4 5 6 7 8 9; 2: 0 1 3 4 5 6 7 8 9; 3: 0 1 2 4 5 6 7 8 9; 4: 0 1 2 3 5 6 7 8 9; 5: 0 1 2 3 4 6 7 8 10; 6: 0 1 2 3 4 5 10 11 12; 7: 0 1 2 3 4 5 11 13 14; 8: 0 1 2 3 4 5 12 13 15; 9: 0 1 2 3 4 11 14 15 16; 10: 5 6 12 14 15 16 17 18 19; 11: 6 7 9 12 13 15 17 18 19; 12: 6 8 10 11 13 16 17 18 19; 13: 7 8 11 12 14 16 17 18 19; 14: 7 9 10 13 15 16 17 18 19; 15: 8 9 10 11 14 16 17 18 19; 16: 9 10 12 13 14 15 17 18 19; 17: 10 11 12 13 14 15 16 18 19; 18: 10 11 12 13 14 15 16 17 19; 19: 10 11 12 13 14 15 16 17 18}"},
    {9, 22,
     "{0: 1 2 3 4 5 6 7 8 9; 1: 0 2 3 4 5 6 7 8 9; 2: 0 1 3 4 5 6 7 8 9; 3: 0 1 2 4 5 6 7 8 9; 4: 0 1 2 3 5 6 7 8 9; 5: 0 1 2 3 4 6 7 8 9; 6: 0 1 2 3 4 5 7 8 10; 7: 0 1 2 3 4 5 6 8 10; 8: 0 1 2 3 4 5 6 7 11; 9: 0 1 2 3 4 5 11 12 13; 10: 6 7 12 13 14 15 16 17 18; 11: 8 9 12 14 15 16 19 20 21; 12: 9 10 11 13 14 15 17 19 20; 13: 9 10 12 14 16 17 18 19 21; 14: 10 11 12 13 15 16 18 20 21; 15: 10 11 12 14 17 18 19 20 21; 16: 10 11 13 14 17 18 19 20 21; 17: 10 12 13 15 16 18 19 20 21; 18: 10 13 14 15 16 17 19 20 21; 19: 11 12 13 15 16 17 18 20 21; 20: 11 12 14 15 16 17 18 19 21; 21: 11 13 14 15 16 17 18 19 20}"},
    {9, 24,
     "{0: 1 2 3 4 5 6 7 8 9; 1: 0 2 3 4 5 6 7 8 9; 2: 0 1 3 4 5 6 7 8 9; 3: 0 1 2 4 5 6 10 11 12; 4: 0 1 2 3 5 6 10 11 13; 5: 0 1 2 3 4 14 15 16 17; 6: 0 1 2 3 4 18 19 20 21; 7: 0 1 2 8 10 14 15 18 19; 8: 0 1 2 7 10 14 15 18 19; 9: 0 1 2 10 11 12 13 14 15; 10: 3 4 7 8 9 11 12 13 14; 11: 3 4 9 10 12 13 14 15 16; 12: 3 9 10 11 13 14 15 16 22; 13: 4 9 10 11 12 17 20 22 23; 14: 5 7 8 9 10 11 12 21 22; 15: 5 7 8 9 11 12 18 20 23; 16: 5 11 12 17 19 20 21 22 23; 17: 5 13 16 18 19 20 21 22 23; 18: 6 7 8 15 17 20 21 22 23; 19: 6 7 8 16 17 20 21 22 23; 20: 6 13 15 16 17 18 19 21 23; 21: 6 14 16 17 18 19 20 22 23; 22: 12 13 14 16 17 18 19 21 23; 23: 13 15 16 17 18 19 20 21 22}"},
    {9, 26,
     "{0: 1 2 3 4 5 6 7 8 9; 1: 0 2 3 4 5 6 7 8 9; 2: 0 1 3 4 5 6 7 8 9; 3: 0 1 2 4 5 6 7 8 9; 4: 0 1 2 3 5 6 7 8 10; 5: 0 1 2 3 4 6 7 11 12; 6: 0 1 2 3 4 5 11 13 14; 7: 0 1 2 3 4 5 15 16 17; 8: 0 1 2 3 4 9 13 15 16; 9: 0 1 2 3 8 10 11 12 13; 10: 4 9 11 12 13 14 15 16 17; 11: 5 6 9 10 12 13 14 15 16; 12: 5 9 10 11 13 14 15 16 17; 13: 6 8 9 10 11 12 18 19 20; 14: 6 10 11 12 15 18 19 21 22; 15: 7 8 10 11 12 14 18 21 23; 16: 7 8 10 11 12 17 20 24 25; 17: 7 10 12 16 20 22 23 24 25; 18: 13 14 15 19 21 22 23 24 25; 19: 13 14 18 20 21 22 23 24 25; 20: 13 16 17 19 21 22 23 24 25; 21: 14 15 18 19 20 22 23 24 25; 22: 14 17 18 19 20 21 23 24 25; 23: 15 17 18 19 20 21 22 24 25; 24: 16 17 18 19 20 21 22 23 25; 25: 16 17 18 19 20 21 22 23 24}"},
    {9, 28,
     "{0: 1 2 3 4 5 6 7 8 9; 1: 0 2 3 4 5 6 7 8 9; 2: 0 1 3 4 5 6 7 8 9; 3: 0 1 2 4 5 6 10 11 12; 4: 0 1 2 3 5 6 10 11 13; 5: 0 1 2 3 4 10 12 13 14; 6: 0 1 2 3 4 12 15 16 17; 7: 0 1 2 8 9 10 12 15 18; 8: 0 1 2 7 9 10 12 15 18; 9: 0 1 2 7 8 10 12 15 18; 10: 3 4 5 7 8 9 11 12 13; 11: 3 4 10 12 13 14 15 16 17; 12: 3 5 6 7 8 9 10 11 13; 13: 4 5 10 11 12 14 15 16 17; 14: 5 11 13 15 16 17 18 19 20; 15: 6 7 8 9 11 13 14 16 19; 16: 6 11 13 14 15 19 21 22 23; 17: 6 11 13 14 19 20 24 25 26; 18: 7 8 9 14 21 22 23 24 27; 19: 14 15 16 17 20 21 25 26 27; 20: 14 17 19 22 23 24 25 26 27; 21: 16 18 19 22 23 24 25 26 27; 22: 16 18 20 21 23 24 25 26 27; 23: 16 18 20 21 22 24 25 26 27; 24: 17 18 20 21 22 23 25 26 27; 25: 17 19 20 21 22 23 24 26 27; 26: 17 19 20 21 22 23 24 25 27; 27: 18 19 20 21 22 23 24 25 26}"},
    {9, 30,
     "{0: 1 2 3 4 5 6 7 8 9; 1: 0 2 3 4 5 6 7 8 9; 2: 0 1 3 4 5 6 7 8 9; 3: 0 1 2 4 5 6 7 8 9; 4: 0 1 2 3 5 6 7 8 9; 5: 0 1 2 3 4 6 7 8 9; 6: 0 1 2 3 4 5 7 10 11; 7: 0 1 2 3 4 5 6 12 13; 8: 0 1 2 3 4 5 10 11 12; 9: 0 1 2 3 4 5 10 14 15; 10: 6 8 9 12 13 16 17 18 19; 11: 6 8 13 20 21 22 23 24 25; 12: 7 8 10 13 14 15 16 17 18; 13: 7 10 11 12 14 15 16 17 18; 14: 9 12 13 15 16 17 18 19 20; 15: 9 12 13 14 16 17 18 19 20; 16: 10 12 13 14 15 17 18 19 20; 17: 10 12 13 14 15 16 18 19 20; 18: 10 12 13 14 15 16 17 21 26; 19: 10 14 15 16 17 22 23 24 26; 20: 11 14 15 16 17 22 27 28 29; 21: 11 18 23 24 25 26 27 28 29; 22: 11 19 20 23 25 26 27 28 29; 23: 11 19 21 22 24 25 27 28 29; 24: 11 19 21 23 25 26 27 28 29; 25: 11 21 22 23 24 26 27 28 29; 26: 18 19 21 22 24 25 27 28 29; 27: 20 21 22 23 24 25 26 28 29; 28: 20 21 22 23 24 25 26 27 29; 29: 20 21 22 23 24 25 26 27 28}"},
    {9, 32,
     "{0: 1 2 3 4 5 6 7 8 9; 1: 0 2 3 4 5 6 7 8 9; 2: 0 1 3 4 5 6 7 8 9; 3: 0 1 2 4 5 6 7 8 9; 4: 0 1 2 3 5 6 7 8 9; 5: 0 1 2 3 4 6 7 8 9; 6: 0 1 2 3 4 5 7 10 11; 7: 0 1 2 3 4 5 6 12 13; 8: 0 1 2 3 4 5 10 11 12; 9: 0 1 2 3 4 5 10 14 15; 10: 6 8 9 11 14 16 17 18 19; 11: 6 8 10 12 13 15 16 20 21; 12: 7 8 11 13 14 15 16 17 18; 13: 7 11 12 14 15 16 17 18 19; 14: 9 10 12 13 15 16 17 18 19; 15: 9 11 12 13 14 16 17 18 19; 16: 10 11 12 13 14 15 17 18 19; 17: 10 12 13 14 15 16 18 19 20; 18: 10 12 13 14 15 16 17 19 22; 19: 10 13 14 15 16 17 18 23 24; 20: 11 17 21 22 23 25 26 27 28; 21: 11 20 22 23 25 26 27 29 30; 22: 18 20 21 23 24 25 29 30 31; 23: 19 20 21 22 24 25 28 29 31; 24: 19 22 23 26 27 28 29 30 31; 25: 20 21 22 23 26 27 28 30 31; 26: 20 21 24 25 27 28 29 30 31; 27: 20 21 24 25 26 28 29 30 31; 28: 20 23 24 25 26 27 29 30 31; 29: 21 22 23 24 26 27 28 30 31; 30: 21 22 24 25 26 27 28 29 31; 31: 22 23 24 25 26 27 28 29 30}"},
    {10, 15,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 11; 2: 0 1 3 4 5 6 7 8 10 12; 3: 0 1 2 4 5 6 7 9 11 13; 4: 0 1 2 3 5 6 7 10 13 14; 5: 0 1 2 3 4 6 9 11 12 14; 6: 0 1 2 3 4 5 11 12 13 14; 7: 0 1 2 3 4 8 10 12 13 14; 8: 0 1 2 7 9 10 11 12 13 14; 9: 0 1 3 5 8 10 11 12 13 14; 10: 0 2 4 7 8 9 11 12 13 14; 11: 1 3 5 6 8 9 10 12 13 14; 12: 2 5 6 7 8 9 10 11 13 14; 13: 3 4 6 7 8 9 10 11 12 14; 14: 4 5 6 7 8 9 10 11 12 13}"},
    {10, 16,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 11; 3: 0 1 2 4 5 6 7 8 10 11; 4: 0 1 2 3 5 6 11 12 13 14; 5: 0 1 2 3 4 7 12 13 14 15; 6: 0 1 2 3 4 8 12 13 14 15; 7: 0 1 2 3 5 9 10 11 12 15; 8: 0 1 2 3 6 9 12 13 14 15; 9: 0 1 2 7 8 10 11 13 14 15; 10: 0 1 3 7 9 11 12 13 14 15; 11: 2 3 4 7 9 10 12 13 14 15; 12: 4 5 6 7 8 10 11 13 14 15; 13: 4 5 6 8 9 10 11 12 14 15; 14: 4 5 6 8 9 10 11 12 13 15; 15: 5 6 7 8 9 10 11 12 13 14}"},
    {10, 17,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 11; 4: 0 1 2 3 5 6 7 10 12 13; 5: 0 1 2 3 4 8 12 13 14 15; 6: 0 1 2 3 4 10 11 12 14 16; 7: 0 1 2 3 4 12 13 14 15 16; 8: 0 1 2 3 5 11 13 14 15 16; 9: 0 1 2 3 11 12 13 14 15 16; 10: 0 1 2 4 6 11 12 14 15 16; 11: 3 6 8 9 10 12 13 14 15 16; 12: 4 5 6 7 9 10 11 13 15 16; 13: 4 5 7 8 9 11 12 14 15 16; 14: 5 6 7 8 9 10 11 13 15 16; 15: 5 7 8 9 10 11 12 13 14 16; 16: 6 7 8 9 10 11 12 13 14 15}"},
    {10, 18,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 10; 4: 0 1 2 3 5 6 7 8 11 12; 5: 0 1 2 3 4 6 9 13 14 15; 6: 0 1 2 3 4 5 10 13 16 17; 7: 0 1 2 3 4 11 12 13 14 15; 8: 0 1 2 3 4 13 14 15 16 17; 9: 0 1 2 3 5 11 12 14 16 17; 10: 0 1 2 3 6 11 12 15 16 17; 11: 4 7 9 10 12 13 14 15 16 17; 12: 4 7 9 10 11 13 14 15 16 17; 13: 5 6 7 8 11 12 14 15 16 17; 14: 5 7 8 9 11 12 13 15 16 17; 15: 5 7 8 10 11 12 13 14 16 17; 16: 6 8 9 10 11 12 13 14 15 17; 17: 6 8 9 10 11 12 13 14 15 16}"},
    {10, 19,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 10; 4: 0 1 2 3 5 6 7 8 9 11; 5: 0 1 2 3 4 6 7 10 11 12; 6: 0 1 2 3 4 5 10 13 14 15; 7: 0 1 2 3 4 5 12 13 16 17; 8: 0 1 2 3 4 11 14 16 17 18; 9: 0 1 2 3 4 13 15 16 17 18; 10: 0 1 2 3 5 6 12 14 15 18; 11: 4 5 8 12 13 14 15 16 17 18; 12: 5 7 10 11 13 14 15 16 17 18; 13: 6 7 9 11 12 14 15 16 17 18; 14: 6 8 10 11 12 13 15 16 17 18; 15: 6 9 10 11 12 13 14 16 17 18; 16: 7 8 9 11 12 13 14 15 17 18; 17: 7 8 9 11 12 13 14 15 16 18; 18: 8 9 10 11 12 13 14 15 16 17}"},
    {10, 20,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 10; 4: 0 1 2 3 5 6 7 8 9 10; 5: 0 1 2 3 4 6 7 8 11 12; 6: 0 1 2 3 4 5 7 9 11 13; 7: 0 1 2 3 4 5 6 14 15 16; 8: 0 1 2 3 4 5 11 13 17 18; 9: 0 1 2 3 4 6 12 14 15 19; 10: 0 1 2 3 4 13 16 17 18 19; 11: 5 6 8 12 14 15 16 17 18 19; 12: 5 9 11 13 14 15 16 17 18 19; 13: 6 8 10 12 14 15 16 17 18 19; 14: 7 9 11 12 13 15 16 17 18 19; 15: 7 9 11 12 13 14 16 17 18 19; 16: 7 10 11 12 13 14 15 17 18 19; 17: 8 10 11 12 13 14 15 16 18 19; 18: 8 10 11 12 13 14 15 16 17 19; 19: 9 10 11 12 13 14 15 16 17 18}"},
    {10, 21,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 10; 4: 0 1 2 3 5 6 7 8 9 10; 5: 0 1 2 3 4 6 7 8 9 11; 6: 0 1 2 3 4 5 7 8 10 12; 7: 0 1 2 3 4 5 6 11 13 14; 8: 0 1 2 3 4 5 6 15 16 17; 9: 0 1 2 3 4 5 13 14 18 19; 10: 0 1 2 3 4 6 12 13 15 20; 11: 5 7 12 14 15 16 17 18 19 20; 12: 6 10 11 13 15 16 17 18 19 20; 13: 7 9 10 12 14 16 17 18 19 20; 14: 7 9 11 13 15 16 17 18 19 20; 15: 8 10 11 12 14 16 17 18 19 20; 16: 8 11 12 13 14 15 17 18 19 20; 17: 8 11 12 13 14 15 16 18 19 20; 18: 9 11 12 13 14 15 16 17 19 20; 19: 9 11 12 13 14 15 16 17 18 20; 20: 10 11 12 13 14 15 16 17 18 19}"},
    {10, 22,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 10; 4: 0 1 2 3 5 6 7 8 9 10; 5: 0 1 2 3 4 6 7 8 9 10; 6: 0 1 2 3 4 5 7 8 9 11; 7: 0 1 2 3 4 5 6 8 11 12; 8: 0 1 2 3 4 5 6 7 11 13; 9: 0 1 2 3 4 5 6 14 15 16; 10: 0 1 2 3 4 5 11 12 14 17; 11: 6 7 8 10 13 15 18 19 20 21; 12: 7 10 13 14 16 17 18 19 20 21; 13: 8 11 12 15 16 17 18 19 20 21; 14: 9 10 12 15 16 17 18 19 20 21; 15: 9 11 13 14 16 17 18 19 20 21; 16: 9 12 13 14 15 17 18 19 20 21; 17: 10 12 13 14 15 16 18 19 20 21; 18: 11 12 13 14 15 16 17 19 20 21; 19: 11 12 13 14 15 16 17 18 20 21; 20: 11 12 13 14 15 16 17 18 19 21; 21: 11 12 13 14 15 16 17 18 19 20}"},
    {10, 23,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 10; 4: 0 1 2 3 5 6 7 8 9 10; 5: 0 1 2 3 4 6 7 11 12 13; 6: 0 1 2 3 4 5 8 11 12 14; 7: 0 1 2 3 4 5 11 15 16 17; 8: 0 1 2 3 4 6 13 18 19 20; 9: 0 1 2 3 4 10 11 12 13 14; 10: 0 1 2 3 4 9 11 12 13 15; 11: 5 6 7 9 10 15 16 18 19 21; 12: 5 6 9 10 13 16 17 18 19 22; 13: 5 8 9 10 12 14 18 20 21 22; 14: 6 9 13 15 16 17 19 20 21 22; 15: 7 10 11 14 17 18 19 20 21 22; 16: 7 11 12 14 17 18 19 20 21 22; 17: 7 12 14 15 16 18 19 20 21 22; 18: 8 11 12 13 15 16 17 20 21 22; 19: 8 11 12 14 15 16 17 20 21 22; 20: 8 13 14 15 16 17 18 19 21 22; 21: 11 13 14 15 16 17 18 19 20 22; 22: 12 13 14 15 16 17 18 19 20 21}"},
    {10, 24,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 10; 4: 0 1 2 3 5 6 7 8 9 10; 5: 0 1 2 3 4 6 7 11 12 13; 6: 0 1 2 3 4 5 8 11 12 14; 7: 0 1 2 3 4 5 11 15 16 17; 8: 0 1 2 3 4 6 12 18 19 20; 9: 0 1 2 3 4 10 11 12 13 14; 10: 0 1 2 3 4 9 11 12 13 14; 11: 5 6 7 9 10 12 13 14 15 18; 12: 5 6 8 9 10 11 15 16 19 21; 13: 5 9 10 11 17 18 20 21 22 23; 14: 6 9 10 11 15 17 19 20 22 23; 15: 7 11 12 14 16 19 20 21 22 23; 16: 7 12 15 17 18 19 20 21 22 23; 17: 7 13 14 16 18 19 20 21 22 23; 18: 8 11 13 16 17 19 20 21 22 23; 19: 8 12 14 15 16 17 18 21 22 23; 20: 8 13 14 15 16 17 18 21 22 23; 21: 12 13 15 16 17 18 19 20 22 23; 22: 13 14 15 16 17 18 19 20 21 23; 23: 13 14 15 16 17 18 19 20 21 22}"},
    {10, 25,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 10; 4: 0 1 2 3 5 6 7 8 9 10; 5: 0 1 2 3 4 6 7 11 12 13; 6: 0 1 2 3 4 5 8 11 12 14; 7: 0 1 2 3 4 5 11 15 16 17; 8: 0 1 2 3 4 6 12 15 16 18; 9: 0 1 2 3 4 10 11 12 13 14; 10: 0 1 2 3 4 9 11 12 13 14; 11: 5 6 7 9 10 12 13 14 15 16; 12: 5 6 8 9 10 11 13 15 17 19; 13: 5 9 10 11 12 17 19 20 21 22; 14: 6 9 10 11 19 20 21 22 23 24; 15: 7 8 11 12 17 18 20 21 23 24; 16: 7 8 11 17 18 19 20 22 23 24; 17: 7 12 13 15 16 18 21 22 23 24; 18: 8 15 16 17 19 20 21 22 23 24; 19: 12 13 14 16 18 20 21 22 23 24; 20: 13 14 15 16 18 19 21 22 23 24; 21: 13 14 15 17 18 19 20 22 23 24; 22: 13 14 16 17 18 19 20 21 23 24; 23: 14 15 16 17 18 19 20 21 22 24; 24: 14 15 16 17 18 19 20 21 22 23}"},
    {10, 26,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 10; 4: 0 1 2 3 5 6 7 8 9 10; 5: 0 1 2 3 4 6 7 11 12 13; 6: 0 1 2 3 4 5 8 11 12 14; 7: 0 1 2 3 4 5 11 15 16 17; 8: 0 1 2 3 4 6 12 15 16 18; 9: 0 1 2 3 4 10 11 12 13 14; 10: 0 1 2 3 4 9 11 12 13 14; 11: 5 6 7 9 10 12 13 14 15 16; 12: 5 6 8 9 10 11 13 14 15 18; 13: 5 9 10 11 12 15 16 19 20 21; 14: 6 9 10 11 12 17 19 20 21 22; 15: 7 8 11 12 13 16 22 23 24 25; 16: 7 8 11 13 15 17 19 23 24 25; 17: 7 14 16 18 20 21 22 23 24 25; 18: 8 12 17 19 20 21 22 23 24 25; 19: 13 14 16 18 20 21 22 23 24 25; 20: 13 14 17 18 19 21 22 23 24 25; 21: 13 14 17 18 19 20 22 23 24 25; 22: 14 15 17 18 19 20 21 23 24 25; 23: 15 16 17 18 19 20 21 22 24 25; 24: 15 16 17 18 19 20 21 22 23 25; 25: 15 16 17 18 19 20 21 22 23 24}"},
    {10, 27,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 10; 4: 0 1 2 3 5 6 7 8 9 10; 5: 0 1 2 3 4 6 7 11 12 13; 6: 0 1 2 3 4 5 8 11 12 14; 7: 0 1 2 3 4 5 11 15 16 17; 8: 0 1 2 3 4 6 12 15 16 18; 9: 0 1 2 3 4 10 11 12 13 14; 10: 0 1 2 3 4 9 11 12 13 14; 11: 5 6 7 9 10 12 13 14 15 16; 12: 5 6 8 9 10 11 13 14 15 16; 13: 5 9 10 11 12 14 15 16 19 20; 14: 6 9 10 11 12 13 15 21 22 23; 15: 7 8 11 12 13 14 19 20 21 24; 16: 7 8 11 12 13 17 18 24 25 26; 17: 7 16 18 19 20 21 22 23 25 26; 18: 8 16 17 19 21 22 23 24 25 26; 19: 13 15 17 18 20 22 23 24 25 26; 20: 13 15 17 19 21 22 23 24 25 26; 21: 14 15 17 18 20 22 23 24 25 26; 22: 14 17 18 19 20 21 23 24 25 26; 23: 14 17 18 19 20 21 22 24 25 26; 24: 15 16 18 19 20 21 22 23 25 26; 25: 16 17 18 19 20 21 22 23 24 26; 26: 16 17 18 19 20 21 22 23 24 25}"},
    {10, 28,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 10; 4: 0 1 2 3 5 6 7 8 9 10; 5: 0 1 2 3 4 6 7 8 9 10; 6: 0 1 2 3 4 5 7 8 11 12; 7: 0 1 2 3 4 5 6 11 12 13; 8: 0 1 2 3 4 5 6 11 13 14; 9: 0 1 2 3 4 5 11 14 15 16; 10: 0 1 2 3 4 5 12 14 17 18; 11: 6 7 8 9 12 13 14 15 16 17; 12: 6 7 10 11 13 14 15 16 17 18; 13: 7 8 11 12 14 15 16 17 18 19; 14: 8 9 10 11 12 13 15 16 17 19; 15: 9 11 12 13 14 17 18 20 21 22; 16: 9 11 12 13 14 20 21 23 24 25; 17: 10 11 12 13 14 15 22 23 26 27; 18: 10 12 13 15 20 22 24 25 26 27; 19: 13 14 20 21 22 23 24 25 26 27; 20: 15 16 18 19 21 23 24 25 26 27; 21: 15 16 19 20 22 23 24 25 26 27; 22: 15 17 18 19 21 23 24 25 26 27; 23: 16 17 19 20 21 22 24 25 26 27; 24: 16 18 19 20 21 22 23 25 26 27; 25: 16 18 19 20 21 22 23 24 26 27; 26: 17 18 19 20 21 22 23 24 25 27; 27: 17 18 19 20 21 22 23 24 25 26}"},
    {10, 29,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 10; 4: 0 1 2 3 5 6 7 8 9 10; 5: 0 1 2 3 4 6 7 8 9 10; 6: 0 1 2 3 4 5 7 8 11 12; 7: 0 1 2 3 4 5 6 11 12 13; 8: 0 1 2 3 4 5 6 11 13 14; 9: 0 1 2 3 4 5 11 14 15 16; 10: 0 1 2 3 4 5 12 14 17 18; 11: 6 7 8 9 12 13 14 15 16 17; 12: 6 7 10 11 13 14 15 16 17 18; 13: 7 8 11 12 14 15 16 17 18 19; 14: 8 9 10 11 12 13 15 16 17 18; 15: 9 11 12 13 14 16 17 19 20 21; 16: 9 11 12 13 14 15 22 23 24 25; 17: 10 11 12 13 14 15 20 22 26 27; 18: 10 12 13 14 20 23 24 26 27 28; 19: 13 15 20 21 22 23 25 26 27 28; 20: 15 17 18 19 21 22 23 24 25 28; 21: 15 19 20 22 23 24 25 26 27 28; 22: 16 17 19 20 21 24 25 26 27 28; 23: 16 18 19 20 21 24 25 26 27 28; 24: 16 18 20 21 22 23 25 26 27 28; 25: 16 19 20 21 22 23 24 26 27 28; 26: 17 18 19 21 22 23 24 25 27 28; 27: 17 18 19 21 22 23 24 25 26 28; 28: 18 19 20 21 22 23 24 25 26 27}"},
    {10, 30,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 10; 4: 0 1 2 3 5 6 7 8 9 10; 5: 0 1 2 3 4 6 7 8 9 10; 6: 0 1 2 3 4 5 7 8 11 12; 7: 0 1 2 3 4 5 6 11 12 13; 8: 0 1 2 3 4 5 6 11 13 14; 9: 0 1 2 3 4 5 11 14 15 16; 10: 0 1 2 3 4 5 12 14 17 18; 11: 6 7 8 9 12 13 14 15 16 17; 12: 6 7 10 11 13 14 15 16 17 18; 13: 7 8 11 12 14 15 16 17 18 19; 14: 8 9 10 11 12 13 15 16 17 18; 15: 9 11 12 13 14 16 17 18 19 20; 16: 9 11 12 13 14 15 17 18 19 21; 17: 10 11 12 13 14 15 16 19 20 22; 18: 10 12 13 14 15 16 21 22 23 24; 19: 13 15 16 17 23 25 26 27 28 29; 20: 15 17 21 23 24 25 26 27 28 29; 21: 16 18 20 22 24 25 26 27 28 29; 22: 17 18 21 23 24 25 26 27 28 29; 23: 18 19 20 22 24 25 26 27 28 29; 24: 18 20 21 22 23 25 26 27 28 29; 25: 19 20 21 22 23 24 26 27 28 29; 26: 19 20 21 22 23 24 25 27 28 29; 27: 19 20 21 22 23 24 25 26 28 29; 28: 19 20 21 22 23 24 25 26 27 29; 29: 19 20 21 22 23 24 25 26 27 28}"},
    {10, 31,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 10; 4: 0 1 2 3 5 6 7 8 9 10; 5: 0 1 2 3 4 6 7 8 9 10; 6: 0 1 2 3 4 5 7 8 11 12; 7: 0 1 2 3 4 5 6 11 12 13; 8: 0 1 2 3 4 5 6 11 13 14; 9: 0 1 2 3 4 5 11 14 15 16; 10: 0 1 2 3 4 5 12 14 17 18; 11: 6 7 8 9 12 13 14 15 16 17; 12: 6 7 10 11 13 14 15 16 17 18; 13: 7 8 11 12 14 15 16 17 18 19; 14: 8 9 10 11 12 13 15 16 17 18; 15: 9 11 12 13 14 16 17 18 19 20; 16: 9 11 12 13 14 15 17 18 19 20; 17: 10 11 12 13 14 15 16 19 21 22; 18: 10 12 13 14 15 16 21 23 24 25; 19: 13 15 16 17 20 23 26 27 28 29; 20: 15 16 19 22 23 24 25 26 27 30; 21: 17 18 22 23 24 25 26 28 29 30; 22: 17 20 21 23 24 26 27 28 29 30; 23: 18 19 20 21 22 25 27 28 29 30; 24: 18 20 21 22 25 26 27 28 29 30; 25: 18 20 21 23 24 26 27 28 29 30; 26: 19 20 21 22 24 25 27 28 29 30; 27: 19 20 22 23 24 25 26 28 29 30; 28: 19 21 22 23 24 25 26 27 29 30; 29: 19 21 22 23 24 25 26 27 28 30; 30: 20 21 22 23 24 25 26 27 28 29}"},
    {10, 32,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 10; 4: 0 1 2 3 5 6 7 8 9 10; 5: 0 1 2 3 4 6 7 8 9 10; 6: 0 1 2 3 4 5 7 8 11 12; 7: 0 1 2 3 4 5 6 11 12 13; 8: 0 1 2 3 4 5 6 11 13 14; 9: 0 1 2 3 4 5 11 14 15 16; 10: 0 1 2 3 4 5 12 14 17 18; 11: 6 7 8 9 12 13 14 15 16 17; 12: 6 7 10 11 13 14 15 16 17 18; 13: 7 8 11 12 14 15 16 17 18 19; 14: 8 9 10 11 12 13 15 16 17 18; 15: 9 11 12 13 14 16 17 18 19 20; 16: 9 11 12 13 14 15 17 18 19 20; 17: 10 11 12 13 14 15 16 18 19 20; 18: 10 12 13 14 15 16 17 19 21 22; 19: 13 15 16 17 18 20 21 23 24 25; 20: 15 16 17 19 21 22 23 26 27 28; 21: 18 19 20 23 26 27 28 29 30 31; 22: 18 20 23 24 25 26 27 29 30 31; 23: 19 20 21 22 24 25 28 29 30 31; 24: 19 22 23 25 26 27 28 29 30 31; 25: 19 22 23 24 26 27 28 29 30 31; 26: 20 21 22 24 25 27 28 29 30 31; 27: 20 21 22 24 25 26 28 29 30 31; 28: 20 21 23 24 25 26 27 29 30 31; 29: 21 22 23 24 25 26 27 28 30 31; 30: 21 22 23 24 25 26 27 28 29 31; 31: 21 22 23 24 25 26 27 28 29 30}"},
    {10, 33,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 10; 4: 0 1 2 3 5 6 7 8 9 10; 5: 0 1 2 3 4 6 7 8 9 10; 6: 0 1 2 3 4 5 7 8 11 12; 7: 0 1 2 3 4 5 6 11 12 13; 8: 0 1 2 3 4 5 6 11 13 14; 9: 0 1 2 3 4 5 11 14 15 16; 10: 0 1 2 3 4 5 12 14 17 18; 11: 6 7 8 9 12 13 14 15 16 17; 12: 6 7 10 11 13 14 15 16 17 18; 13: 7 8 11 12 14 15 16 17 18 19; 14: 8 9 10 11 12 13 15 16 17 18; 15: 9 11 12 13 14 16 17 18 19 20; 16: 9 11 12 13 14 15 17 18 19 20; 17: 10 11 12 13 14 15 16 18 19 20; 18: 10 12 13 14 15 16 17 19 21 22; 19: 13 15 16 17 18 23 24 25 26 27; 20: 15 16 17 21 23 24 28 29 30 31; 21: 18 20 23 25 26 28 29 30 31 32; 22: 18 23 24 25 26 27 28 29 30 32; 23: 19 20 21 22 24 25 27 28 29 32; 24: 19 20 22 23 26 27 28 29 30 31; 25: 19 21 22 23 26 27 28 30 31 32; 26: 19 21 22 24 25 27 29 30 31 32; 27: 19 22 23 24 25 26 29 30 31 32; 28: 20 21 22 23 24 25 29 30 31 32; 29: 20 21 22 23 24 26 27 28 31 32; 30: 20 21 22 24 25 26 27 28 31 32; 31: 20 21 24 25 26 27 28 29 30 32; 32: 21 22 23 25 26 27 28 29 30 31}"},
    {10, 34,
     "{0: 1 2 3 4 5 6 7 8 9 10; 1: 0 2 3 4 5 6 7 8 9 10; 2: 0 1 3 4 5 6 7 8 9 10; 3: 0 1 2 4 5 6 7 8 9 10; 4: 0 1 2 3 5 6 7 8 9 10; 5: 0 1 2 3 4 6 7 8 9 10; 6: 0 1 2 3 4 5 7 8 11 12; 7: 0 1 2 3 4 5 6 11 12 13; 8: 0 1 2 3 4 5 6 11 13 14; 9: 0 1 2 3 4 5 11 14 15 16; 10: 0 1 2 3 4 5 12 14 17 18; 11: 6 7 8 9 12 13 14 15 16 17; 12: 6 7 10 11 13 14 15 16 17 18; 13: 7 8 11 12 14 15 16 17 18 19; 14: 8 9 10 11 12 13 15 16 17 18; 15: 9 11 12 13 14 16 17 18 19 20; 16: 9 11 12 13 14 15 17 18 19 20; 17: 10 11 12 13 14 15 16 18 19 20; 18: 10 12 13 14 15 16 17 19 20 21; 19: 13 15 16 17 18 20 21 22 23 24; 20: 15 16 17 18 19 21 22 25 26 27; 21: 18 19 20 22 23 24 25 28 29 30; 22: 19 20 21 23 25 26 27 28 31 32; 23: 19 21 22 25 26 27 29 31 32 33; 24: 19 21 25 26 28 29 30 31 32 33; 25: 20 21 22 23 24 26 28 29 30 33; 26: 20 22 23 24 25 27 30 31 32 33; 27: 20 22 23 26 28 29 30 31 32 33; 28: 21 22 24 25 27 29 30 31 32 33; 29: 21 23 24 25 27 28 30 31 32 33; 30: 21 24 25 26 27 28 29 31 32 33; 31: 22 23 24 26 27 28 29 30 32 33; 32: 22 23 24 26 27 28 29 30 31 33; 33: 23 24 25 26 27 28 29 30 31 32}"},
    {11, 16,
     "{0: 1 2 3 4 5 6 7 8 9 10 11; 1: 0 2 3 4 5 6 7 8 9 10 11; 2: 0 1 3 4 5 6 7 8 9 10 12; 3: 0 1 2 4 5 6 7 11 12 13 14; 4: 0 1 2 3 5 6 8 11 13 14 15; 5: 0 1 2 3 4 9 10 11 12 13 15; 6: 0 1 2 3 4 9 11 12 13 14 15; 7: 0 1 2 3 8 9 10 11 12 14 15; 8: 0 1 2 4 7 9 10 12 13 14 15; 9: 0 1 2 5 6 7 8 12 13 14 15; 10: 0 1 2 5 7 8 11 12 13 14 15; 11: 0 1 3 4 5 6 7 10 13 14 15; 12: 2 3 5 6 7 8 9 10 13 14 15; 13: 3 4 5 6 8 9 10 11 12 14 15; 14: 3 4 6 7 8 9 10 11 12 13 15; 15: 4 5 6 7 8 9 10 11 12 13 14}"},
    {11, 18,
     "{0: 1 2 3 4 5 6 7 8 9 10 11; 1: 0 2 3 4 5 6 7 8 9 10 11; 2: 0 1 3 4 5 6 7 8 9 10 11; 3: 0 1 2 4 5 6 7 8 9 10 11; 4: 0 1 2 3 5 6 7 8 12 13 14; 5: 0 1 2 3 4 6 7 9 12 13 15; 6: 0 1 2 3 4 5 10 12 14 16 17; 7: 0 1 2 3 4 5 11 14 15 16 17; 8: 0 1 2 3 4 12 13 14 15 16 17; 9: 0 1 2 3 5 12 13 14 15 16 17; 10: 0 1 2 3 6 11 12 13 15 16 17; 11: 0 1 2 3 7 10 13 14 15 16 17; 12: 4 5 6 8 9 10 13 14 15 16 17; 13: 4 5 8 9 10 11 12 14 15 16 17; 14: 4 6 7 8 9 11 12 13 15 16 17; 15: 5 7 8 9 10 11 12 13 14 16 17; 16: 6 7 8 9 10 11 12 13 14 15 17; 17: 6 7 8 9 10 11 12 13 14 15 16}"},
    {11, 20,
     "{0: 1 2 3 4 5 6 7 8 9 10 11; 1: 0 2 3 4 5 6 7 8 9 10 11; 2: 0 1 3 4 5 6 7 8 9 10 11; 3: 0 1 2 4 5 6 7 8 9 10 11; 4: 0 1 2 3 5 6 7 8 9 10 11; 5: 0 1 2 3 4 6 7 8 12 13 14; 6: 0 1 2 3 4 5 12 13 15 16 17; 7: 0 1 2 3 4 5 12 14 15 16 18; 8: 0 1 2 3 4 5 12 15 17 18 19; 9: 0 1 2 3 4 12 13 14 17 18 19; 10: 0 1 2 3 4 13 14 15 16 17 19; 11: 0 1 2 3 4 13 14 15 16 18 19; 12: 5 6 7 8 9 13 15 16 17 18 19; 13: 5 6 9 10 11 12 14 16 17 18 19; 14: 5 7 9 10 11 13 15 16 17 18 19; 15: 6 7 8 10 11 12 14 16 17 18 19; 16: 6 7 10 11 12 13 14 15 17 18 19; 17: 6 8 9 10 12 13 14 15 16 18 19; 18: 7 8 9 11 12 13 14 15 16 17 19; 19: 8 9 10 11 12 13 14 15 16 17 18}"},
    {11, 22,
     "{0: 1 2 3 4 5 6 7 8 9 10 11; 1: 0 2 3 4 5 6 7 8 9 10 11; 2: 0 1 3 4 5 6 7 8 9 10 11; 3: 0 1 2 4 5 6 7 8 9 10 11; 4: 0 1 2 3 5 6 7 8 9 10 12; 5: 0 1 2 3 4 6 7 8 9 12 13; 6: 0 1 2 3 4 5 11 12 14 15 16; 7: 0 1 2 3 4 5 11 13 14 15 17; 8: 0 1 2 3 4 5 12 13 14 17 18; 9: 0 1 2 3 4 5 12 13 17 19 20; 10: 0 1 2 3 4 11 14 17 18 19 21; 11: 0 1 2 3 6 7 10 15 16 20 21; 12: 4 5 6 8 9 15 16 18 19 20 21; 13: 5 7 8 9 14 15 16 18 19 20 21; 14: 6 7 8 10 13 16 17 18 19 20 21; 15: 6 7 11 12 13 16 17 18 19 20 21; 16: 6 11 12 13 14 15 17 18 19 20 21; 17: 7 8 9 10 14 15 16 18 19 20 21; 18: 8 10 12 13 14 15 16 17 19 20 21; 19: 9 10 12 13 14 15 16 17 18 20 21; 20: 9 11 12 13 14 15 16 17 18 19 21; 21: 10 11 12 13 14 15 16 17 18 19 20}"},
    {11, 24,
     "{0: 1 2 3 4 5 6 7 8 9 10 11; 1: 0 2 3 4 5 6 7 8 9 10 11; 2: 0 1 3 4 5 6 7 8 9 10 11; 3: 0 1 2 4 5 6 7 8 9 10 11; 4: 0 1 2 3 5 6 7 8 9 10 11; 5: 0 1 2 3 4 6 7 8 9 10 12; 6: 0 1 2 3 4 5 7 8 9 13 14; 7: 0 1 2 3 4 5 6 10 15 16 17; 8: 0 1 2 3 4 5 6 10 15 16 18; 9: 0 1 2 3 4 5 6 10 15 19 20; 10: 0 1 2 3 4 5 7 8 9 13 21; 11: 0 1 2 3 4 13 14 17 18 22 23; 12: 5 13 14 15 16 17 19 20 21 22 23; 13: 6 10 11 12 17 18 19 20 21 22 23; 14: 6 11 12 15 16 17 18 19 20 21 22; 15: 7 8 9 12 14 16 17 19 20 22 23; 16: 7 8 12 14 15 17 18 19 21 22 23; 17: 7 11 12 13 14 15 16 18 20 21 23; 18: 8 11 13 14 16 17 19 20 21 22 23; 19: 9 12 13 14 15 16 18 20 21 22 23; 20: 9 12 13 14 15 17 18 19 21 22 23; 21: 10 12 13 14 16 17 18 19 20 22 23; 22: 11 12 13 14 15 16 18 19 20 21 23; 23: 11 12 13 15 16 17 18 19 20 21 22}"},
    {11, 26,
     "{0: 1 2 3 4 5 6 7 8 9 10 11; 1: 0 2 3 4 5 6 7 8 9 10 11; 2: 0 1 3 4 5 6 7 8 9 10 11; 3: 0 1 2 4 5 6 7 8 9 10 11; 4: 0 1 2 3 5 6 7 8 9 10 11; 5: 0 1 2 3 4 6 7 8 9 12 13; 6: 0 1 2 3 4 5 10 11 14 15 16; 7: 0 1 2 3 4 5 10 14 15 16 17; 8: 0 1 2 3 4 5 10 14 15 18 19; 9: 0 1 2 3 4 5 18 19 20 21 22; 10: 0 1 2 3 4 6 7 8 12 13 14; 11: 0 1 2 3 4 6 12 13 14 15 16; 12: 5 10 11 13 14 15 16 17 18 19 20; 13: 5 10 11 12 14 15 18 21 22 23 24; 14: 6 7 8 10 11 12 13 19 20 23 25; 15: 6 7 8 11 12 13 17 21 23 24 25; 16: 6 7 11 12 17 19 20 22 23 24 25; 17: 7 12 15 16 18 20 21 22 23 24 25; 18: 8 9 12 13 17 19 20 21 22 24 25; 19: 8 9 12 14 16 18 21 22 23 24 25; 20: 9 12 14 16 17 18 21 22 23 24 25; 21: 9 13 15 17 18 19 20 22 23 24 25; 22: 9 13 16 17 18 19 20 21 23 24 25; 23: 13 14 15 16 17 19 20 21 22 24 25; 24: 13 15 16 17 18 19 20 21 22 23 25; 25: 14 15 16 17 18 19 20 21 22 23 24}"},
    {11, 28,
     "{0: 1 2 3 4 5 6 7 8 9 10 11; 1: 0 2 3 4 5 6 7 8 9 10 11; 2: 0 1 3 4 5 6 7 8 9 10 11; 3: 0 1 2 4 5 6 7 8 9 10 11; 4: 0 1 2 3 5 6 7 8 9 10 11; 5: 0 1 2 3 4 6 7 8 9 12 13; 6: 0 1 2 3 4 5 10 11 14 15 16; 7: 0 1 2 3 4 5 10 12 17 18 19; 8: 0 1 2 3 4 5 10 14 15 20 21; 9: 0 1 2 3 4 5 11 14 15 16 20; 10: 0 1 2 3 4 6 7 8 12 13 14; 11: 0 1 2 3 4 6 9 12 13 14 15; 12: 5 7 10 11 13 14 15 16 17 18 19; 13: 5 10 11 12 14 15 16 17 18 19 20; 14: 6 8 9 10 11 12 13 16 17 22 23; 15: 6 8 9 11 12 13 18 22 24 25 26; 16: 6 9 12 13 14 19 22 23 24 25 27; 17: 7 12 13 14 21 22 23 24 25 26 27; 18: 7 12 13 15 20 21 22 24 25 26 27; 19: 7 12 13 16 21 22 23 24 25 26 27; 20: 8 9 13 18 21 22 23 24 25 26 27; 21: 8 17 18 19 20 22 23 24 25 26 27; 22: 14 15 16 17 18 19 20 21 23 26 27; 23: 14 16 17 19 20 21 22 24 25 26 27; 24: 15 16 17 18 19 20 21 23 25 26 27; 25: 15 16 17 18 19 20 21 23 24 26 27; 26: 15 17 18 19 20 21 22 23 24 25 27; 27: 16 17 18 19 20 21 22 23 24 25 26}"},
    {11, 30,
     "{0: 1 2 3 4 5 6 7 8 9 10 11; 1: 0 2 3 4 5 6 7 8 9 10 11; 2: 0 1 3 4 5 6 7 8 9 10 11; 3: 0 1 2 4 5 6 7 8 9 10 11; 4: 0 1 2 3 5 6 7 8 9 10 11; 5: 0 1 2 3 4 6 7 8 9 12 13; 6: 0 1 2 3 4 5 10 11 14 15 16; 7: 0 1 2 3 4 5 10 12 17 18 19; 8: 0 1 2 3 4 5 10 14 15 16 20; 9: 0 1 2 3 4 5 13 21 22 23 24; 10: 0 1 2 3 4 6 7 8 12 13 14; 11: 0 1 2 3 4 6 12 13 14 15 16; 12: 5 7 10 11 13 14 15 16 17 18 19; 13: 5 9 10 11 12 14 15 16 17 18 19; 14: 6 8 10 11 12 13 15 16 17 18 19; 15: 6 8 11 12 13 14 16 17 18 19 20; 16: 6 8 11 12 13 14 15 17 21 22 25; 17: 7 12 13 14 15 16 18 20 23 25 26; 18: 7 12 13 14 15 17 21 25 27 28 29; 19: 7 12 13 14 15 23 24 26 27 28 29; 20: 8 15 17 22 23 24 25 26 27 28 29; 21: 9 16 18 22 23 24 25 26 27 28 29; 22: 9 16 20 21 23 24 25 26 27 28 29; 23: 9 17 19 20 21 22 24 26 27 28 29; 24: 9 19 20 21 22 23 25 26 27 28 29; 25: 16 17 18 20 21 22 24 26 27 28 29; 26: 17 19 20 21 22 23 24 25 27 28 29; 27: 18 19 20 21 22 23 24 25 26 28 29; 28: 18 19 20 21 22 23 24 25 26 27 29; 29: 18 19 20 21 22 23 24 25 26 27 28}"},
    {11, 32,
     "{0: 1 2 3 4 5 6 7 8 9 10 11; 1: 0 2 3 4 5 6 7 8 9 10 11; 2: 0 1 3 4 5 6 7 8 9 10 11; 3: 0 1 2 4 5 6 7 8 9 10 11; 4: 0 1 2 3 5 6 7 8 9 10 11; 5: 0 1 2 3 4 6 7 8 9 12 13; 6: 0 1 2 3 4 5 10 11 14 15 16; 7: 0 1 2 3 4 5 10 12 17 18 19; 8: 0 1 2 3 4 5 10 14 15 16 20; 9: 0 1 2 3 4 5 12 17 18 21 22; 10: 0 1 2 3 4 6 7 8 12 13 14; 11: 0 1 2 3 4 6 12 13 14 15 16; 12: 5 7 9 10 11 13 14 15 16 17 18; 13: 5 10 11 12 14 15 16 17 18 19 20; 14: 6 8 10 11 12 13 15 16 17 18 19; 15: 6 8 11 12 13 14 16 17 18 19 20; 16: 6 8 11 12 13 14 15 17 18 19 20; 17: 7 9 12 13 14 15 16 18 19 20 23; 18: 7 9 12 13 14 15 16 17 21 24 25; 19: 7 13 14 15 16 17 23 24 25 26 27; 20: 8 13 15 16 17 22 23 28 29 30 31; 21: 9 18 23 24 25 26 27 28 29 30 31; 22: 9 20 23 24 25 26 27 28 29 30 31; 23: 17 19 20 21 22 26 27 28 29 30 31; 24: 18 19 21 22 25 26 27 28 29 30 31; 25: 18 19 21 22 24 26 27 28 29 30 31; 26: 19 21 22 23 24 25 27 28 29 30 31; 27: 19 21 22 23 24 25 26 28 29 30 31; 28: 20 21 22 23 24 25 26 27 29 30 31; 29: 20 21 22 23 24 25 26 27 28 30 31; 30: 20 21 22 23 24 25 26 27 28 29 31; 31: 20 21 22 23 24 25 26 27 28 29 30}"},
    {11, 34,
     "{0: 1 2 3 4 5 6 7 8 9 10 11; 1: 0 2 3 4 5 6 7 8 9 10 11; 2: 0 1 3 4 5 6 7 8 9 10 11; 3: 0 1 2 4 5 6 7 8 9 10 11; 4: 0 1 2 3 5 6 7 8 9 10 11; 5: 0 1 2 3 4 6 7 8 9 12 13; 6: 0 1 2 3 4 5 10 11 14 15 16; 7: 0 1 2 3 4 5 10 12 17 18 19; 8: 0 1 2 3 4 5 10 14 15 16 20; 9: 0 1 2 3 4 5 12 17 18 20 21; 10: 0 1 2 3 4 6 7 8 12 13 14; 11: 0 1 2 3 4 6 12 13 14 15 16; 12: 5 7 9 10 11 13 14 15 16 17 18; 13: 5 10 11 12 14 15 16 17 18 19 20; 14: 6 8 10 11 12 13 15 16 17 18 19; 15: 6 8 11 12 13 14 16 17 18 19 20; 16: 6 8 11 12 13 14 15 17 18 19 20; 17: 7 9 12 13 14 15 16 18 19 20 21; 18: 7 9 12 13 14 15 16 17 19 20 22; 19: 7 13 14 15 16 17 18 20 21 23 24; 20: 8 9 13 15 16 17 18 19 25 26 27; 21: 9 17 19 22 23 24 25 28 29 30 31; 22: 18 21 23 24 25 26 27 28 29 32 33; 23: 19 21 22 25 26 27 28 30 31 32 33; 24: 19 21 22 25 26 28 29 30 31 32 33; 25: 20 21 22 23 24 27 29 30 31 32 33; 26: 20 22 23 24 27 28 29 30 31 32 33; 27: 20 22 23 25 26 28 29 30 31 32 33; 28: 21 22 23 24 26 27 29 30 31 32 33; 29: 21 22 24 25 26 27 28 30 31 32 33; 30: 21 23 24 25 26 27 28 29 31 32 33; 31: 21 23 24 25 26 27 28 29 30 32 33; 32: 22 23 24 25 26 27 28 29 30 31 33; 33: 22 23 24 25 26 27 28 29 30 31 32}"},
    {11, 36,
     "{0: 1 2 3 4 5 6 7 8 9 10 11; 1: 0 2 3 4 5 6 7 8 9 10 11; 2: 0 1 3 4 5 6 7 8 9 10 11; 3: 0 1 2 4 5 6 7 8 9 10 11; 4: 0 1 2 3 5 6 7 8 9 10 11; 5: 0 1 2 3 4 6 7 8 9 12 13; 6: 0 1 2 3 4 5 10 11 14 15 16; 7: 0 1 2 3 4 5 10 12 17 18 19; 8: 0 1 2 3 4 5 10 14 15 16 20; 9: 0 1 2 3 4 5 12 17 18 20 21; 10: 0 1 2 3 4 6 7 8 12 13 14; 11: 0 1 2 3 4 6 12 13 14 15 16; 12: 5 7 9 10 11 13 14 15 16 17 18; 13: 5 10 11 12 14 15 16 17 18 19 20; 14: 6 8 10 11 12 13 15 16 17 18 19; 15: 6 8 11 12 13 14 16 17 18 19 20; 16: 6 8 11 12 13 14 15 17 18 19 20; 17: 7 9 12 13 14 15 16 18 19 20 21; 18: 7 9 12 13 14 15 16 17 19 20 21; 19: 7 13 14 15 16 17 18 20 21 22 23; 20: 8 9 13 15 16 17 18 19 21 22 24; 21: 9 17 18 19 20 22 23 24 25 26 27; 22: 19 20 21 23 24 25 26 27 28 29 30; 23: 19 21 22 25 28 29 31 32 33 34 35; 24: 20 21 22 26 28 29 31 32 33 34 35; 25: 21 22 23 27 28 29 30 31 32 33 34; 26: 21 22 24 27 28 29 30 31 32 33 35; 27: 21 22 25 26 28 30 31 32 33 34 35; 28: 22 23 24 25 26 27 29 30 31 34 35; 29: 22 23 24 25 26 28 30 32 33 34 35; 30: 22 25 26 27 28 29 31 32 33 34 35; 31: 23 24 25 26 27 28 30 32 33 34 35; 32: 23 24 25 26 27 29 30 31 33 34 35; 33: 23 24 25 26 27 29 30 31 32 34 35; 34: 23 24 25 27 28 29 30 31 32 33 35; 35: 23 24 26 27 28 29 30 31 32 33 34}"},
};

} // namespace

const RawSeed* raw_seed_catalog(std::size_t* count) {
  *count = std::size(kSeeds);
  return kSeeds;
}

} // namespace nutkit::detail
