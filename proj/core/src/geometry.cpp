#include "descent/geometry.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace descent {

std::vector<Halfspace> halfspace_system(const XYWord& v) {
    int n = v.size() + 1;
    std::vector<Halfspace> hs;
    hs.reserve(2 * n + v.size());
    for (int i = 0; i < n; ++i) {
        Halfspace lower{std::vector<int>(n, 0), 0};  // -x_i <= 0
        lower.normal[i] = -1;
        hs.push_back(std::move(lower));
        Halfspace upper{std::vector<int>(n, 0), 1};  // x_i <= 1
        upper.normal[i] = 1;
        hs.push_back(std::move(upper));
    }
    for (int i = 0; i < v.size(); ++i) {
        Halfspace cmp{std::vector<int>(n, 0), 0};
        if (v[i] == Letter::X) {  // x_i <= x_{i+1}
            cmp.normal[i] = 1;
            cmp.normal[i + 1] = -1;
        } else {  // x_{i+1} <= x_i
            cmp.normal[i] = -1;
            cmp.normal[i + 1] = 1;
        }
        hs.push_back(std::move(cmp));
    }
    return hs;
}

int FaceLattice::VertexSet::count() const {
    int c = 0;
    for (std::uint64_t w : bits) c += std::popcount(w);
    return c;
}

FaceLattice::VertexSet FaceLattice::VertexSet::operator&(const VertexSet& o) const {
    VertexSet r;
    for (int i = 0; i < 4; ++i) r.bits[i] = bits[i] & o.bits[i];
    return r;
}

bool FaceLattice::VertexSet::contains(const VertexSet& o) const {
    for (int i = 0; i < 4; ++i)
        if ((bits[i] & o.bits[i]) != o.bits[i]) return false;
    return true;
}

namespace {

// Affine dimension of the selected vertices: rank of the differences
// against the first selected point.  Incremental fraction-free elimination;
// the basis rows are kept mutually reduced (each pivot column is nonzero in
// exactly one row), which makes a single pass over the basis an exact
// linear-dependence test for each incoming row.  No per-face point copies,
// and the loop exits as soon as the rank reaches the ambient dimension.
int affine_dim(const FaceLattice::VertexSet& s, const std::vector<std::vector<int>>& vertices,
               int n) {
    int first = -1;
    std::vector<std::array<long long, 16>> basis;
    std::vector<int> pivots;  // pivots[k]: leading column of basis[k]
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        if (!s.test(i)) continue;
        if (first < 0) {
            first = i;
            continue;
        }
        std::array<long long, 16> row{};
        for (int j = 0; j < n; ++j) row[j] = vertices[i][j] - vertices[first][j];
        for (std::size_t k = 0; k < basis.size(); ++k) {
            int p = pivots[k];
            if (row[p] == 0) continue;
            long long a = basis[k][p];
            long long c = row[p];
            for (int j = 0; j < n; ++j) row[j] = row[j] * a - basis[k][j] * c;
        }
        int p = 0;
        while (p < n && row[p] == 0) ++p;
        if (p == n) continue;  // in the span of the basis
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k][p] == 0) continue;
            long long a = row[p];
            long long c = basis[k][p];
            for (int j = 0; j < n; ++j) basis[k][j] = basis[k][j] * a - row[j] * c;
        }
        basis.push_back(row);
        pivots.push_back(p);
        if (static_cast<int>(basis.size()) == n) return n;  // cannot grow further
    }
    if (first < 0) throw std::logic_error("affine_dim: empty vertex set");
    return static_cast<int>(basis.size());
}

}  // namespace

std::vector<std::vector<int>> enumerate_vertices(const XYWord& v) {
    if (v.size() > kMaxVertexEnumLength)
        throw std::invalid_argument("enumerate_vertices: word length " + std::to_string(v.size()) +
                                    " exceeds cap " + std::to_string(kMaxVertexEnumLength));
    int n = v.size() + 1;
    std::vector<Halfspace> hs = halfspace_system(v);
    std::vector<std::vector<int>> vertices;
    // 0/1 points inside every halfspace.  Bit n-1-i of the counter is x_i,
    // so the listing is ordered as binary strings x_1 x_2 ... x_n.
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = (m >> (n - 1 - i)) & 1;
        bool inside = true;
        for (const Halfspace& h : hs) {
            int dot = 0;
            for (int i = 0; i < n; ++i) dot += h.normal[i] * p[i];
            if (dot > h.offset) {
                inside = false;
                break;
            }
        }
        if (inside) vertices.push_back(std::move(p));
    }
    return vertices;
}

FaceLattice FaceLattice::build(const XYWord& v) {
    if (v.size() > kMaxLatticeLength)
        throw std::invalid_argument("FaceLattice::build: word length " + std::to_string(v.size()) +
                                    " exceeds cap " + std::to_string(kMaxLatticeLength));
    int n = v.size() + 1;
    FaceLattice fl;
    fl.word_ = v;
    fl.n_ = n;
    fl.vertices_ = enumerate_vertices(v);

    std::vector<Halfspace> hs = halfspace_system(v);
    int nv = static_cast<int>(fl.vertices_.size());
    if (nv > kMaxLatticeVertices)
        throw std::logic_error("FaceLattice::build: vertex count exceeds bitset capacity");

    // Facets: halfspaces whose tight vertex set is (n-1)-dimensional.
    // Cube bounds that only graze an edge or vertex are dropped here.
    std::set<VertexSet> facet_sets;
    for (const Halfspace& h : hs) {
        VertexSet tight;
        bool any = false;
        for (int i = 0; i < nv; ++i) {
            int dot = 0;
            for (int j = 0; j < fl.n_; ++j) dot += h.normal[j] * fl.vertices_[i][j];
            if (dot == h.offset) {
                tight.set(i);
                any = true;
            }
        }
        if (!any) continue;
        if (affine_dim(tight, fl.vertices_, n) == n - 1) facet_sets.insert(tight);
    }

    // Close under intersection with facets, starting from the whole
    // polytope.  Every face is an intersection of facets, so the worklist
    // reaches all of them.
    VertexSet full;
    for (int i = 0; i < nv; ++i) full.set(i);
    std::map<VertexSet, int> dims;
    dims[full] = n;
    std::deque<VertexSet> work{full};
    while (!work.empty()) {
        VertexSet f = work.front();
        work.pop_front();
        for (const VertexSet& g : facet_sets) {
            VertexSet h = f & g;
            if (h.empty() || dims.contains(h)) continue;
            dims[h] = affine_dim(h, fl.vertices_, n);
            work.push_back(h);
        }
    }

    for (const auto& [members, dim] : dims) fl.faces_.push_back(Face{members, dim});
    std::sort(fl.faces_.begin(), fl.faces_.end(), [](const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.members < b.members;
    });
    return fl;
}

FPolynomial f_vector_oracle(const XYWord& v) {
    FaceLattice fl = FaceLattice::build(v);
    return FPolynomial{v, fl.dim(), fl.face_polynomial()};
}

std::vector<Int> FaceLattice::f_vector() const {
    std::vector<Int> f(n_ + 1, 0);
    for (const Face& face : faces_) ++f[face.dim];
    return f;
}

TPoly FaceLattice::face_polynomial() const {
    TPoly p;
    for (const Face& face : faces_) p += TPoly::monomial(1, face.dim);
    return p;
}

int FaceLattice::facet_count() const {
    int c = 0;
    for (const Face& face : faces_)
        if (face.dim == n_ - 1) ++c;
    return c;
}

std::string FaceLattice::to_dot() const {
    std::ostringstream out;
    out << "digraph face_lattice {\n";
    out << "  // polytope of word " << word_.str() << ", dimension " << n_ << "\n";
    out << "  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        out << "  // vertex " << i << " = (";
        for (int j = 0; j < n_; ++j) out << (j ? "," : "") << vertices_[i][j];
        out << ")\n";
    }
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        out << "  f" << i << " [label=\"d" << faces_[i].dim << " {";
        bool first = true;
        for (int vtx = 0; vtx < static_cast<int>(vertices_.size()); ++vtx) {
            if (!faces_[i].members.test(vtx)) continue;
            out << (first ? "" : ",") << vtx;
            first = false;
        }
        out << "}\"];\n";
    }
    // Cover relations: the lattice is graded, so covers are exactly the
    // containments that drop the dimension by one.
    for (std::size_t i = 0; i < faces_.size(); ++i)
        for (std::size_t j = 0; j < faces_.size(); ++j) {
            if (faces_[j].dim != faces_[i].dim + 1) continue;
            if (faces_[j].members.contains(faces_[i].members)) out << "  f" << i << " -> f" << j << ";\n";
        }
    for (int d = 0; d <= n_; ++d) {
        bool any = false;
        std::ostringstream rank;
        rank << "  { rank=same;";
        for (std::size_t i = 0; i < faces_.size(); ++i)
            if (faces_[i].dim == d) {
                rank << " f" << i << ";";
                any = true;
            }
        rank << " }\n";
        if (any) out << rank.str();
    }
    out << "}\n";
    return out.str();
}

}  // namespace descent
