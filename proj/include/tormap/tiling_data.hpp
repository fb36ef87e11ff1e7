#pragma once
// Generated by scripts/generate_tiling_data.py -- do not edit by hand.

namespace tormap::data {

struct RawVertex { long long xn, xd, yn, yd; const char* type; };
struct RawEdge { int v1, v2, sx, sy; };
struct RawSlot { int edge, dir, sx, sy; };
struct RawBasisVec { long long p, q, den; };  // (p + q*sqrt(d)) / den
struct RawTiling {
  const char* tag;
  const char* vertex_type;     // empty when not semi-equivelar
  const char* edge_symbol;     // "m,l,u,v" or empty
  const char* dual_tag;        // empty when outside the dual table
  const char* assoc_tag;       // associated equivelar tag, or empty
  const char* point_group;     // D6, D4, D2 or Z6
  int plane_edge_orbits;
  int num_vertices, num_edges, num_faces;
  const RawVertex* vertices;
  const RawEdge* edges;
  const int* face_sizes;
  const RawSlot* face_slots;   // concatenated walks
  int basis_surd;              // d in sqrt(d); 0 when no closed form is stored
  RawBasisVec ax, ay, bx, by;
};

inline constexpr RawVertex k_3_6_vertices[] = {
  {0, 1, 0, 1, "3.3.3.3.3.3"},
};
inline constexpr RawEdge k_3_6_edges[] = {
  {0, 0, -1, 0},
  {0, 0, -1, 1},
  {0, 0, 0, -1},
};
inline constexpr int k_3_6_face_sizes[] = {3, 3};
inline constexpr RawSlot k_3_6_face_slots[] = {
  {0, 0, 0, 0}, {1, 1, 0, -1}, {2, 1, 0, 0},
  {0, 1, 1, 0}, {1, 0, 1, 0}, {2, 0, 0, 1},
};

inline constexpr RawTiling k_3_6 = {
  "3^6", "3.3.3.3.3.3", "3,3,6,6", "6^3", "", "D6", 3,
  1, 3, 2,
  k_3_6_vertices, k_3_6_edges, k_3_6_face_sizes, k_3_6_face_slots,
  3, {1, 0, 1}, {0, 0, 1}, {1, 0, 2}, {0, 1, 2},
};

inline constexpr RawVertex k_4_4_vertices[] = {
  {0, 1, 0, 1, "4.4.4.4"},
};
inline constexpr RawEdge k_4_4_edges[] = {
  {0, 0, -1, 0},
  {0, 0, 0, -1},
};
inline constexpr int k_4_4_face_sizes[] = {4};
inline constexpr RawSlot k_4_4_face_slots[] = {
  {0, 0, 0, 0}, {1, 0, -1, 0}, {0, 1, 0, -1}, {1, 1, 0, 0},
};

inline constexpr RawTiling k_4_4 = {
  "4^4", "4.4.4.4", "4,4,4,4", "4^4", "", "D4", 2,
  1, 2, 1,
  k_4_4_vertices, k_4_4_edges, k_4_4_face_sizes, k_4_4_face_slots,
  1, {1, 0, 1}, {0, 0, 1}, {0, 0, 1}, {1, 0, 1},
};

inline constexpr RawVertex k_6_3_vertices[] = {
  {1, 3, 1, 3, "6.6.6"},
  {2, 3, 2, 3, "6.6.6"},
};
inline constexpr RawEdge k_6_3_edges[] = {
  {0, 1, -1, 0},
  {0, 1, 0, -1},
  {0, 1, 0, 0},
};
inline constexpr int k_6_3_face_sizes[] = {6};
inline constexpr RawSlot k_6_3_face_slots[] = {
  {0, 0, 0, 0}, {2, 1, -1, 0}, {1, 0, -1, 0}, {0, 1, 0, -1}, {2, 0, 0, -1}, {1, 1, 0, 0},
};

inline constexpr RawTiling k_6_3 = {
  "6^3", "6.6.6", "6,6,3,3", "3^6", "", "D6", 3,
  2, 3, 1,
  k_6_3_vertices, k_6_3_edges, k_6_3_face_sizes, k_6_3_face_slots,
  3, {0, 1, 1}, {0, 0, 1}, {0, 1, 2}, {3, 0, 2},
};

inline constexpr RawVertex k_3_6_3_6_vertices[] = {
  {0, 1, 1, 2, "3.6.3.6"},
  {1, 2, 0, 1, "3.6.3.6"},
  {1, 2, 1, 2, "6.3.6.3"},
};
inline constexpr RawEdge k_3_6_3_6_edges[] = {
  {0, 1, -1, 1},
  {0, 1, 0, 0},
  {0, 2, -1, 0},
  {0, 2, 0, 0},
  {1, 2, 0, -1},
  {1, 2, 0, 0},
};
inline constexpr int k_3_6_3_6_face_sizes[] = {3, 6, 3};
inline constexpr RawSlot k_3_6_3_6_face_slots[] = {
  {0, 0, 0, 0}, {4, 0, -1, 1}, {2, 1, 0, 0},
  {0, 1, 1, -1}, {3, 0, 1, -1}, {4, 1, 1, 0}, {1, 1, 1, 0}, {2, 0, 1, 0}, {5, 1, 0, 0},
  {1, 0, 0, 0}, {5, 0, 0, 0}, {3, 1, 0, 0},
};

inline constexpr RawTiling k_3_6_3_6 = {
  "3.6.3.6", "3.6.3.6", "3,6,4,4", "rhombille", "", "D6", 3,
  3, 6, 3,
  k_3_6_3_6_vertices, k_3_6_3_6_edges, k_3_6_3_6_face_sizes, k_3_6_3_6_face_slots,
  3, {2, 0, 1}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1},
};

inline constexpr RawVertex k_rhombille_vertices[] = {
  {0, 1, 0, 1, "4.4.4.4.4.4"},
  {1, 3, 1, 3, "4.4.4"},
  {2, 3, 2, 3, "4.4.4"},
};
inline constexpr RawEdge k_rhombille_edges[] = {
  {0, 1, -1, 0},
  {0, 1, 0, -1},
  {0, 1, 0, 0},
  {0, 2, -1, -1},
  {0, 2, -1, 0},
  {0, 2, 0, -1},
};
inline constexpr int k_rhombille_face_sizes[] = {4, 4, 4};
inline constexpr RawSlot k_rhombille_face_slots[] = {
  {0, 0, 0, 0}, {2, 1, -1, 0}, {5, 0, -1, 0}, {3, 1, 0, 0},
  {0, 1, 1, 0}, {4, 0, 1, 0}, {5, 1, 0, 1}, {1, 0, 0, 1},
  {1, 1, 0, 1}, {3, 0, 0, 1}, {4, 1, 0, 0}, {2, 0, 0, 0},
};

inline constexpr RawTiling k_rhombille = {
  "rhombille", "", "4,4,3,6", "3.6.3.6", "", "D6", 3,
  3, 6, 3,
  k_rhombille_vertices, k_rhombille_edges, k_rhombille_face_sizes, k_rhombille_face_slots,
  3, {2, 0, 1}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1},
};

inline constexpr RawVertex k_3_12_2_vertices[] = {
  {15, 97, 41, 97, "3.12.12"},
  {41, 97, 41, 97, "12.12.3"},
  {41, 97, 15, 97, "12.3.12"},
  {56, 97, 56, 97, "12.3.12"},
  {56, 97, 82, 97, "3.12.12"},
  {82, 97, 56, 97, "12.3.12"},
};
inline constexpr RawEdge k_3_12_2_edges[] = {
  {0, 1, 0, 0},
  {0, 2, 0, 0},
  {0, 5, -1, 0},
  {1, 2, 0, 0},
  {1, 3, 0, 0},
  {2, 4, 0, -1},
  {3, 4, 0, 0},
  {3, 5, 0, 0},
  {4, 5, 0, 0},
};
inline constexpr int k_3_12_2_face_sizes[] = {12, 3, 3};
inline constexpr RawSlot k_3_12_2_face_slots[] = {
  {0, 0, 0, 0}, {4, 0, 0, 0}, {6, 0, 0, 0}, {5, 1, 0, 1}, {1, 1, 0, 1}, {2, 0, 0, 1}, {7, 1, -1, 1}, {4, 1, -1, 1}, {3, 0, -1, 1}, {5, 0, -1, 1}, {8, 0, -1, 0}, {2, 1, 0, 0},
  {0, 1, 0, 0}, {1, 0, 0, 0}, {3, 1, 0, 0},
  {6, 1, 0, 0}, {7, 0, 0, 0}, {8, 1, 0, 0},
};

inline constexpr RawTiling k_3_12_2 = {
  "3.12^2", "3.12.12", "", "", "3^6", "D6", 2,
  6, 9, 3,
  k_3_12_2_vertices, k_3_12_2_edges, k_3_12_2_face_sizes, k_3_12_2_face_slots,
  3, {2, 1, 1}, {0, 0, 1}, {2, 1, 2}, {3, 2, 2},
};

inline constexpr RawVertex k_3_4_6_4_vertices[] = {
  {15, 71, 56, 97, "3.4.6.4"},
  {15, 71, 15, 71, "4.3.4.6"},
  {41, 97, 56, 71, "4.3.4.6"},
  {56, 97, 15, 71, "6.4.3.4"},
  {56, 71, 41, 97, "6.4.3.4"},
  {56, 71, 56, 71, "3.4.6.4"},
};
inline constexpr RawEdge k_3_4_6_4_edges[] = {
  {0, 1, 0, 0},
  {0, 2, 0, 0},
  {0, 3, 0, 0},
  {0, 5, -1, 0},
  {1, 2, 0, -1},
  {1, 3, 0, 0},
  {1, 4, -1, 0},
  {2, 4, 0, 0},
  {2, 5, 0, 0},
  {3, 4, 0, 0},
  {3, 5, 0, -1},
  {4, 5, 0, 0},
};
inline constexpr int k_3_4_6_4_face_sizes[] = {3, 4, 6, 4, 4, 3};
inline constexpr RawSlot k_3_4_6_4_face_slots[] = {
  {0, 0, 0, 0}, {5, 0, 0, 0}, {2, 1, 0, 0},
  {0, 1, 0, 0}, {3, 0, 0, 0}, {11, 1, -1, 0}, {6, 1, 0, 0},
  {1, 0, 0, 0}, {4, 1, 0, 1}, {6, 0, 0, 1}, {9, 1, -1, 1}, {10, 0, -1, 1}, {3, 1, 0, 0},
  {1, 1, 0, 0}, {2, 0, 0, 0}, {9, 0, 0, 0}, {7, 1, 0, 0},
  {4, 0, 0, 0}, {8, 0, 0, -1}, {10, 1, 0, 0}, {5, 1, 0, 0},
  {7, 0, 0, 0}, {11, 0, 0, 0}, {8, 1, 0, 0},
};

inline constexpr RawTiling k_3_4_6_4 = {
  "3.4.6.4", "3.4.6.4", "", "", "3^6", "D6", 2,
  6, 12, 6,
  k_3_4_6_4_vertices, k_3_4_6_4_edges, k_3_4_6_4_face_sizes, k_3_4_6_4_face_slots,
  3, {1, 1, 1}, {0, 0, 1}, {1, 1, 2}, {3, 1, 2},
};

inline constexpr RawVertex k_4_6_12_vertices[] = {
  {5, 41, 1, 3, "6.4.12"},
  {5, 41, 49, 90, "6.12.4"},
  {1, 3, 49, 90, "4.12.6"},
  {1, 3, 5, 41, "4.6.12"},
  {41, 90, 2, 3, "4.6.12"},
  {41, 90, 36, 41, "6.4.12"},
  {49, 90, 5, 41, "4.12.6"},
  {49, 90, 1, 3, "12.4.6"},
  {2, 3, 41, 90, "12.6.4"},
  {2, 3, 36, 41, "12.4.6"},
  {36, 41, 41, 90, "4.6.12"},
  {36, 41, 2, 3, "4.12.6"},
};
inline constexpr RawEdge k_4_6_12_edges[] = {
  {0, 1, 0, 0},
  {0, 3, 0, 0},
  {0, 10, -1, 0},
  {1, 2, 0, 0},
  {1, 11, -1, 0},
  {2, 4, 0, 0},
  {2, 7, 0, 0},
  {3, 5, 0, -1},
  {3, 6, 0, 0},
  {4, 5, 0, 0},
  {4, 8, 0, 0},
  {5, 9, 0, 0},
  {6, 7, 0, 0},
  {6, 9, 0, -1},
  {7, 8, 0, 0},
  {8, 10, 0, 0},
  {9, 11, 0, 0},
  {10, 11, 0, 0},
};
inline constexpr int k_4_6_12_face_sizes[] = {4, 6, 12, 4, 4, 6};
inline constexpr RawSlot k_4_6_12_face_slots[] = {
  {0, 0, 0, 0}, {4, 0, 0, 0}, {17, 1, -1, 0}, {2, 1, 0, 0},
  {0, 1, 0, 0}, {1, 0, 0, 0}, {8, 0, 0, 0}, {12, 0, 0, 0}, {6, 1, 0, 0}, {3, 1, 0, 0},
  {1, 1, 0, 0}, {2, 0, 0, 0}, {15, 1, -1, 0}, {14, 1, -1, 0}, {12, 1, -1, 0}, {13, 0, -1, 0}, {16, 0, -1, -1}, {4, 1, 0, -1}, {3, 0, 0, -1}, {5, 0, 0, -1}, {9, 0, 0, -1}, {7, 1, 0, 0},
  {5, 1, 0, 0}, {6, 0, 0, 0}, {14, 0, 0, 0}, {10, 1, 0, 0},
  {7, 0, 0, 0}, {11, 0, 0, -1}, {13, 1, 0, 0}, {8, 1, 0, 0},
  {9, 1, 0, 0}, {10, 0, 0, 0}, {15, 0, 0, 0}, {17, 0, 0, 0}, {16, 1, 0, 0}, {11, 1, 0, 0},
};

inline constexpr RawTiling k_4_6_12 = {
  "4.6.12", "4.6.12", "", "", "3^6", "D6", 3,
  12, 18, 6,
  k_4_6_12_vertices, k_4_6_12_edges, k_4_6_12_face_sizes, k_4_6_12_face_slots,
  3, {3, 1, 1}, {0, 0, 1}, {3, 1, 2}, {3, 3, 2},
};

inline constexpr RawVertex k_4_8_2_vertices[] = {
  {6, 29, 1, 2, "4.8.8"},
  {1, 2, 23, 29, "4.8.8"},
  {1, 2, 6, 29, "8.4.8"},
  {23, 29, 1, 2, "8.8.4"},
};
inline constexpr RawEdge k_4_8_2_edges[] = {
  {0, 1, 0, 0},
  {0, 2, 0, 0},
  {0, 3, -1, 0},
  {1, 2, 0, 1},
  {1, 3, 0, 0},
  {2, 3, 0, 0},
};
inline constexpr int k_4_8_2_face_sizes[] = {8, 4};
inline constexpr RawSlot k_4_8_2_face_slots[] = {
  {0, 0, 0, 0}, {3, 0, 0, 0}, {1, 1, 0, 1}, {2, 0, 0, 1}, {5, 1, -1, 1}, {3, 1, -1, 0}, {4, 0, -1, 0}, {2, 1, 0, 0},
  {0, 1, 0, 0}, {1, 0, 0, 0}, {5, 0, 0, 0}, {4, 1, 0, 0},
};

inline constexpr RawTiling k_4_8_2 = {
  "4.8^2", "4.8.8", "", "", "4^4", "D4", 2,
  4, 6, 2,
  k_4_8_2_vertices, k_4_8_2_edges, k_4_8_2_face_sizes, k_4_8_2_face_slots,
  2, {1, 1, 1}, {0, 0, 1}, {0, 0, 1}, {1, 1, 1},
};

inline constexpr RawVertex k_3_3_4_2_vertices[] = {
  {71, 194, 26, 97, "4.3.3.3.4"},
  {123, 194, 71, 97, "3.3.4.4.3"},
};
inline constexpr RawEdge k_3_3_4_2_edges[] = {
  {0, 0, -1, 0},
  {0, 1, -1, 0},
  {0, 1, 0, -1},
  {0, 1, 0, 0},
  {1, 1, -1, 0},
};
inline constexpr int k_3_3_4_2_face_sizes[] = {4, 3, 3};
inline constexpr RawSlot k_3_3_4_2_face_slots[] = {
  {0, 0, 0, 0}, {2, 0, -1, 0}, {4, 1, 0, -1}, {2, 1, 0, 0},
  {0, 1, 1, 0}, {1, 0, 1, 0}, {3, 1, 0, 0},
  {1, 1, 1, 0}, {3, 0, 1, 0}, {4, 0, 1, 0},
};

inline constexpr RawTiling k_3_3_4_2 = {
  "3^3.4^2", "3.3.3.4.4", "", "", "4^4", "D2", 3,
  2, 5, 3,
  k_3_3_4_2_vertices, k_3_3_4_2_edges, k_3_3_4_2_face_sizes, k_3_3_4_2_face_slots,
  3, {1, 0, 1}, {0, 0, 1}, {1, 0, 2}, {2, 1, 2},
};

inline constexpr RawVertex k_3_2_4_3_4_vertices[] = {
  {15, 82, 13, 41, "4.3.4.3.3"},
  {13, 41, 67, 82, "3.4.3.3.4"},
  {28, 41, 15, 82, "3.4.3.4.3"},
  {67, 82, 28, 41, "3.3.4.3.4"},
};
inline constexpr RawEdge k_3_2_4_3_4_edges[] = {
  {0, 1, 0, -1},
  {0, 1, 0, 0},
  {0, 2, -1, 0},
  {0, 2, 0, 0},
  {0, 3, -1, 0},
  {1, 2, 0, 1},
  {1, 3, -1, 0},
  {1, 3, 0, 0},
  {2, 3, 0, -1},
  {2, 3, 0, 0},
};
inline constexpr int k_3_2_4_3_4_face_sizes[] = {3, 4, 3, 4, 3, 3};
inline constexpr RawSlot k_3_2_4_3_4_face_slots[] = {
  {0, 0, 0, 0}, {5, 0, 0, -1}, {3, 1, 0, 0},
  {0, 1, 0, 1}, {2, 0, 0, 1}, {8, 0, -1, 1}, {6, 1, 0, 0},
  {1, 0, 0, 0}, {6, 0, 0, 0}, {4, 1, 0, 0},
  {1, 1, 0, 0}, {3, 0, 0, 0}, {9, 0, 0, 0}, {7, 1, 0, 0},
  {2, 1, 1, 0}, {4, 0, 1, 0}, {9, 1, 0, 0},
  {5, 1, 0, -1}, {7, 0, 0, -1}, {8, 1, 0, 0},
};

inline constexpr RawTiling k_3_2_4_3_4 = {
  "3^2.4.3.4", "3.3.4.3.4", "", "", "4^4", "Z4", 3,
  4, 10, 6,
  k_3_2_4_3_4_vertices, k_3_2_4_3_4_edges, k_3_2_4_3_4_face_sizes, k_3_2_4_3_4_face_slots,
  0, {0,0,1}, {0,0,1}, {0,0,1}, {0,0,1},
};

inline constexpr RawVertex k_3_4_6_vertices[] = {
  {1, 7, 2, 7, "3.3.3.3.6"},
  {2, 7, 4, 7, "3.3.3.6.3"},
  {3, 7, 6, 7, "3.3.3.3.6"},
  {4, 7, 1, 7, "3.6.3.3.3"},
  {5, 7, 3, 7, "3.6.3.3.3"},
  {6, 7, 5, 7, "3.3.6.3.3"},
};
inline constexpr RawEdge k_3_4_6_edges[] = {
  {0, 1, 0, 0},
  {0, 2, 0, -1},
  {0, 3, 0, 0},
  {0, 4, -1, 0},
  {0, 5, -1, 0},
  {1, 2, 0, 0},
  {1, 3, 0, 0},
  {1, 4, 0, 0},
  {1, 5, -1, 0},
  {2, 3, 0, 1},
  {2, 4, 0, 0},
  {2, 5, 0, 0},
  {3, 4, 0, 0},
  {3, 5, 0, -1},
  {4, 5, 0, 0},
};
inline constexpr int k_3_4_6_face_sizes[] = {3, 3, 3, 6, 3, 3, 3, 3, 3};
inline constexpr RawSlot k_3_4_6_face_slots[] = {
  {0, 0, 0, 0}, {8, 0, 0, 0}, {4, 1, 0, 0},
  {0, 1, 0, 0}, {2, 0, 0, 0}, {6, 1, 0, 0},
  {1, 0, 0, 0}, {9, 0, 0, -1}, {2, 1, 0, 0},
  {1, 1, 0, 1}, {3, 0, 0, 1}, {12, 1, -1, 1}, {13, 0, -1, 1}, {8, 1, 0, 0}, {5, 0, 0, 0},
  {3, 1, 1, 0}, {4, 0, 1, 0}, {14, 1, 0, 0},
  {5, 1, 0, 0}, {7, 0, 0, 0}, {10, 1, 0, 0},
  {6, 0, 0, 0}, {12, 0, 0, 0}, {7, 1, 0, 0},
  {9, 1, 0, -1}, {11, 0, 0, -1}, {13, 1, 0, 0},
  {10, 0, 0, 0}, {14, 0, 0, 0}, {11, 1, 0, 0},
};

inline constexpr RawTiling k_3_4_6 = {
  "3^4.6", "3.3.3.3.6", "", "", "3^6", "Z6", 2,
  6, 15, 9,
  k_3_4_6_vertices, k_3_4_6_edges, k_3_4_6_face_sizes, k_3_4_6_face_slots,
  3, {5, 0, 2}, {0, 1, 2}, {1, 0, 2}, {0, 3, 2},
};

inline constexpr const RawTiling* k_all_tilings[] = {
  &k_3_6,
  &k_4_4,
  &k_6_3,
  &k_3_6_3_6,
  &k_rhombille,
  &k_3_12_2,
  &k_3_4_6_4,
  &k_4_6_12,
  &k_4_8_2,
  &k_3_3_4_2,
  &k_3_2_4_3_4,
  &k_3_4_6,
};
inline constexpr int k_num_tilings = 12;

}  // namespace tormap::data
