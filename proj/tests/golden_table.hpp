#pragma once

#include <iterator>

// Transcription of the published table of canonical endomorphisms at pairs of
// extremal vertices, G1 = A_{m-1} at an end vertex. Labels s(j,k) with k
// along G2.
struct GoldenRow {
  const char* g2;
  const char* coxeter;
  const char* dist;
  const char* theta;
};

inline constexpr GoldenRow kGoldenTable[] = {
    {"A_n", "n+1", "-", "s(0,0)"},
    {"D_n", "2n-2", "1", "s(0,0) + s(0,4) + s(0,8) + ... + s(0,4[n/2]-4)"},
    {"D_n", "2n-2", "n-3", "s(0,0) + s(0,2n-4)"},
    {"E6", "12", "1", "s(0,0) + s(0,4) + s(0,6) + s(0,10)"},
    {"E6", "12", "2", "s(0,0) + s(0,6)"},
    {"E7", "18", "1", "s(0,0) + s(0,4) + s(0,6) + s(0,8) + s(0,10) + s(0,12) + s(0,16)"},
    {"E7", "18", "2", "s(0,0) + s(0,6) + s(0,10) + s(0,16)"},
    {"E7", "18", "3", "s(0,0) + s(0,8) + s(0,16)"},
    {"E8", "30", "1",
     "s(0,0) + s(0,4) + s(0,6) + s(0,8) + 2*s(0,10) + s(0,12) + 2*s(0,14) + s(0,16) + "
     "2*s(0,18) + s(0,20) + s(0,22) + s(0,24) + s(0,28)"},
    {"E8", "30", "2",
     "s(0,0) + s(0,6) + s(0,10) + s(0,12) + s(0,16) + s(0,18) + s(0,22) + s(0,28)"},
    {"E8", "30", "4", "s(0,0) + s(0,10) + s(0,18) + s(0,28)"},
};

inline constexpr std::size_t kGoldenRows = std::size(kGoldenTable);
