#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "descent/fvector.hpp"
#include "descent/words.hpp"

namespace descent {

// Halfspace normal . x <= offset with integer data.
struct Halfspace {
    std::vector<int> normal;
    int offset = 0;
};

// The defining inequalities of the polytope of v inside [0,1]^n: the cube
// bounds 0 <= x_i <= 1 plus one comparison per letter, x_i <= x_{i+1} for x
// and x_{i+1} <= x_i for y.
std::vector<Halfspace> halfspace_system(const XYWord& v);

// Geometry is the expensive road: the face lattice is built from vertices
// and facet intersections with no combinatorial shortcuts, precisely so it
// can serve as an oracle for the counting routes in fvector.hpp.
inline constexpr int kMaxVertexEnumLength = 14;  // word length for vertex listing
inline constexpr int kMaxLatticeLength = 9;      // word length for the full lattice
inline constexpr int kMaxLatticeVertices = 256;

// All 0/1 points of [0,1]^n satisfying the halfspace system of v; these are
// exactly the polytope's vertices.  Ordered as binary strings x_1 ... x_n.
// |v| <= kMaxVertexEnumLength.
std::vector<std::vector<int>> enumerate_vertices(const XYWord& v);

class FaceLattice {
  public:
    // Fixed-capacity vertex subset; kMaxLatticeVertices bits.
    struct VertexSet {
        std::array<std::uint64_t, 4> bits{};

        void set(int i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }
        bool test(int i) const { return (bits[i >> 6] >> (i & 63)) & 1; }
        int count() const;
        bool empty() const { return !(bits[0] | bits[1] | bits[2] | bits[3]); }
        VertexSet operator&(const VertexSet& o) const;
        bool contains(const VertexSet& o) const;  // superset test
        auto operator<=>(const VertexSet&) const = default;
    };

    struct Face {
        VertexSet members;
        int dim = 0;
    };

    // Enumerates the vertices, finds the facets as the (n-1)-dimensional
    // faces cut out by single halfspaces, then closes under intersection.
    // |v| <= kMaxLatticeLength.
    static FaceLattice build(const XYWord& v);

    const XYWord& word() const { return word_; }
    int dim() const { return n_; }

    // Vertex coordinates, each a 0/1 vector of length n.  Order is the
    // numeric order of the points read as binary strings.
    const std::vector<std::vector<int>>& vertices() const { return vertices_; }

    // Every nonempty face including the polytope itself, sorted by
    // dimension, then by vertex set.
    const std::vector<Face>& faces() const { return faces_; }

    std::vector<Int> f_vector() const;  // counts by dimension, ascending
    TPoly face_polynomial() const;
    int facet_count() const;

    // Hasse diagram of the face lattice in Graphviz DOT format, faces
    // grouped by dimension, edges covering relations.
    std::string to_dot() const;

  private:
    XYWord word_;
    int n_ = 0;
    std::vector<std::vector<int>> vertices_;
    std::vector<Face> faces_;
};

// The lattice route to the face counts, packaged like the counting routes
// in fvector.hpp so the two can be compared term by term.
FPolynomial f_vector_oracle(const XYWord& v);

}  // namespace descent
