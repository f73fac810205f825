#pragma once

// Shared test fixtures: small named graphs and the two figure graphs used
// across the suites.

#include "clg/graph.hpp"

namespace fixtures {

using clg::Edge;
using clg::Graph;
using clg::Vertex;

inline Graph path(int n) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int i = 1; i <= n; ++i) vs.push_back(i);
    for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
    return Graph(vs, es);
}

inline Graph cycle(int n) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int i = 1; i <= n; ++i) vs.push_back(i);
    for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
    es.push_back(clg::make_edge(n, 1));
    return Graph(vs, es);
}

inline Graph complete(int n) {
    std::vector<Vertex> vs;
    for (int i = 1; i <= n; ++i) vs.push_back(i);
    return Graph::complete(vs);
}

inline Graph edgeless(int n) {
    std::vector<Vertex> vs;
    for (int i = 1; i <= n; ++i) vs.push_back(i);
    return Graph(vs, {});
}

// K_{1,3} with center 1.
inline Graph claw() {
    return Graph({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}});
}

// K4 minus the edge {2,4} = line graph of the paw.
inline Graph diamond() {
    return Graph({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
}

// Triangle {1,2,3} with pendant vertex 4 attached at 1.
inline Graph paw() {
    return Graph({1, 2, 3, 4}, {{1, 2}, {1, 3}, {2, 3}, {1, 4}});
}

// Figure 1(a): K4 core {1,2,3,4} plus degree-2 vertices 5,6,7,8 on the rim
// pairs {1,2},{2,3},{3,4},{4,1}. Chordal, not a line graph.
inline Graph fig1a() {
    return Graph({1, 2, 3, 4, 5, 6, 7, 8},
                 {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
                  {1, 5}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {4, 7}, {4, 8}, {1, 8}});
}

// Figure 1(b): the line graph of K4 (the octahedron), drawn explicitly.
// Vertices name the K4 edges: 1=AB 2=BC 3=CD 4=AD 5=AC 6=BD.
inline Graph fig1b() {
    return Graph({1, 2, 3, 4, 5, 6},
                 {{4, 1}, {1, 2}, {2, 3}, {3, 4},
                  {5, 1}, {5, 4}, {5, 3}, {5, 2},
                  {6, 1}, {6, 4}, {6, 3}, {6, 2}});
}

// Figure 3: the 17-vertex, 19-edge root graph G whose line graph is chordal.
inline Graph fig3_root() {
    std::vector<Vertex> vs;
    for (int i = 1; i <= 17; ++i) vs.push_back(i);
    return Graph(vs, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7},
                      {4, 5}, {4, 8}, {5, 9}, {6, 10}, {6, 11}, {6, 12}, {6, 13},
                      {7, 15}, {7, 14}, {14, 15}, {15, 16}, {15, 17}});
}

// Figure 3: L(G) as drawn (19 vertices a..s mapped to 1..19, 39 edges).
inline Graph fig3_line() {
    std::vector<Vertex> vs;
    for (int i = 1; i <= 19; ++i) vs.push_back(i);
    // a=1 b=2 c=3 d=4 e=5 f=6 g=7 h=8 i=9 j=10 k=11 l=12 m=13 n=14 o=15 p=16 q=17 r=18 s=19
    return Graph(vs, {{1, 2},  {1, 3},  {1, 4},  {1, 5},  {2, 3},  {2, 6},  {2, 7},
                      {3, 4},  {3, 5},  {3, 6},  {3, 7},  {4, 5},  {4, 8},  {4, 9},
                      {5, 8},  {5, 10}, {6, 7},  {6, 11}, {6, 12}, {6, 13}, {6, 14},
                      {7, 16}, {7, 15}, {8, 9},  {8, 10}, {11, 12}, {11, 13}, {11, 14},
                      {12, 13}, {12, 14}, {13, 14}, {15, 16}, {15, 17}, {15, 18}, {15, 19},
                      {16, 17}, {17, 18}, {17, 19}, {18, 19}});
}

}  // namespace fixtures
