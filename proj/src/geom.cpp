#include "reflex/geom.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "reflex/cone.hpp"
#include "reflex/linalg.hpp"

namespace reflex {

Polytope::Polytope(std::vector<LatticeVec> points) {
    require(!points.empty(), "polytope: no points");
    size_t n = points[0].size();
    require(n >= 1, "polytope: ambient dimension 0");
    for (const auto& p : points)
        require(p.size() == n, "polytope: inconsistent dimension");
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::vector<std::vector<Int>> diffs;
    for (size_t i = 1; i < points.size(); ++i) diffs.push_back(vsub(points[i], points[0]));
    require(!diffs.empty() && zrank(diffs) == n,
            "polytope: input is not full-dimensional");
    dim_ = n;

    // Facets of conv(points) = extreme rays of the dual of the cone over
    // {1} x points.
    std::vector<std::vector<Int>> homog;
    for (const auto& p : points) {
        std::vector<Int> h(n + 1);
        h[0] = 1;
        for (size_t i = 0; i < n; ++i) h[i + 1] = p[i];
        homog.push_back(std::move(h));
    }
    for (const auto& ray : dual_cone_rays(homog)) {
        Facet f;
        f.offset = ray[0];
        f.normal.assign(ray.begin() + 1, ray.end());
        check(!is_zero(f.normal), "polytope: degenerate facet normal");
        facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end(), [](const Facet& a, const Facet& b) {
        if (a.normal != b.normal) return lex_less(a.normal, b.normal);
        return a.offset < b.offset;
    });

    // Keep exactly the extreme points: active facet normals span rank n.
    for (const auto& p : points) {
        std::vector<std::vector<Int>> active;
        for (const Facet& f : facets_)
            if (dot(f.normal, p) + f.offset == 0) active.push_back(f.normal);
        if (!active.empty() && zrank(active) == n) verts_.push_back(p);
    }
    check(verts_.size() >= n + 1, "polytope: vertex extraction failed");
}

bool Polytope::contains(const LatticeVec& x) const {
    for (const Facet& f : facets_)
        if (dot(f.normal, x) + f.offset < 0) return false;
    return true;
}

bool Polytope::on_facet(size_t f, const LatticeVec& x) const {
    return dot(facets_[f].normal, x) + facets_[f].offset == 0;
}

bool Polytope::strictly_contains_origin() const {
    for (const Facet& f : facets_)
        if (f.offset <= 0) return false;
    return true;
}

Polytope Polytope::dilate(const Int& k) const {
    require(k >= 1, "dilate: factor must be positive");
    Polytope q;
    q.dim_ = dim_;
    for (const auto& v : verts_) q.verts_.push_back(vscale(k, v));
    for (const auto& f : facets_) q.facets_.push_back({f.normal, k * f.offset});
    return q;
}

Polytope pn_polytope(unsigned n) {
    require(n >= 1, "pn_polytope: n must be >= 1");
    std::vector<LatticeVec> verts;
    for (unsigned i = 0; i < n; ++i) {
        LatticeVec v(n, Int(-1));
        v[i] = n;
        verts.push_back(std::move(v));
    }
    verts.emplace_back(n, Int(-1));
    return Polytope(std::move(verts));
}

namespace {

void box_of(const Polytope& p, std::vector<Int>& lo, std::vector<Int>& hi) {
    size_t n = p.dim();
    lo.assign(n, Int(0));
    hi.assign(n, Int(0));
    for (size_t i = 0; i < n; ++i) {
        lo[i] = hi[i] = p.vertices()[0][i];
        for (const auto& v : p.vertices()) {
            if (v[i] < lo[i]) lo[i] = v[i];
            if (v[i] > hi[i]) hi[i] = v[i];
        }
    }
}

Int to_int(long long v) { return Int(static_cast<long>(v)); }
Int to_int(const Int& v) { return v; }

void enumerate_rec(const Polytope& p, const std::vector<Int>& lo,
                   const std::vector<Int>& hi, LatticeVec& x, size_t depth,
                   std::vector<LatticeVec>& out) {
    if (depth == p.dim()) {
        if (p.contains(x)) out.push_back(x);
        return;
    }
    for (Int v = lo[depth]; v <= hi[depth]; ++v) {
        x[depth] = v;
        enumerate_rec(p, lo, hi, x, depth + 1, out);
    }
}

// Counting kernel over a generic exact integer type. At each depth the
// remaining range of every facet functional is interval-bounded; the
// innermost coordinate is counted without looping.
template <typename T>
struct CountKernel {
    size_t n;
    std::vector<std::vector<T>> normals;  // per facet
    std::vector<T> offsets;
    std::vector<T> lo, hi;
    std::vector<std::vector<T>> tail_max;  // per facet, per depth

    void init_tails() {
        size_t nf = normals.size();
        tail_max.assign(nf, std::vector<T>(n + 1, T(0)));
        for (size_t f = 0; f < nf; ++f)
            for (size_t j = n; j-- > 0;) {
                T a = normals[f][j] * lo[j], b = normals[f][j] * hi[j];
                tail_max[f][j] = tail_max[f][j + 1] + (a > b ? a : b);
            }
    }

    T count(size_t depth, std::vector<T>& partial) const {
        size_t nf = normals.size();
        if (depth == n - 1) {
            // partial_f + u_f * x >= 0 for all f, x in [lo, hi].
            T xlo = lo[depth], xhi = hi[depth];
            for (size_t f = 0; f < nf; ++f) {
                const T& u = normals[f][depth];
                T rhs = -partial[f];
                if (u == 0) {
                    if (partial[f] < 0) return T(0);
                } else if (u > 0) {  // x >= rhs/u
                    T b = ceil_div(rhs, u);
                    if (b > xlo) xlo = b;
                } else {  // x <= rhs/u with u < 0
                    T b = floor_div(rhs, u);
                    if (b < xhi) xhi = b;
                }
            }
            return xhi >= xlo ? T(xhi - xlo + 1) : T(0);
        }
        T total(0);
        for (T v = lo[depth]; v <= hi[depth]; ++v) {
            bool ok = true;
            std::vector<T> np(nf);
            for (size_t f = 0; f < nf; ++f) {
                np[f] = partial[f] + normals[f][depth] * v;
                if (np[f] + tail_max[f][depth + 1] < 0) { ok = false; break; }
            }
            if (ok) total += count(depth + 1, np);
        }
        return total;
    }

    static T ceil_div(const T& a, const T& b);
    static T floor_div(const T& a, const T& b);
};

template <>
long long CountKernel<long long>::ceil_div(const long long& a, const long long& b) {
    long long q = a / b, r = a % b;
    return q + ((r != 0 && ((r > 0) == (b > 0))) ? 1 : 0);
}
template <>
long long CountKernel<long long>::floor_div(const long long& a, const long long& b) {
    long long q = a / b, r = a % b;
    return q - ((r != 0 && ((r > 0) != (b > 0))) ? 1 : 0);
}
template <>
Int CountKernel<Int>::ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
template <>
Int CountKernel<Int>::floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

template <typename T>
CountKernel<T> make_kernel(const Polytope& p, const std::vector<Int>& lo,
                           const std::vector<Int>& hi) {
    CountKernel<T> k;
    k.n = p.dim();
    for (const Facet& f : p.facets()) {
        std::vector<T> row;
        for (const Int& c : f.normal) row.push_back(T(c.get_si()));
        k.normals.push_back(std::move(row));
        k.offsets.push_back(T(f.offset.get_si()));
    }
    for (size_t i = 0; i < k.n; ++i) {
        k.lo.push_back(T(lo[i].get_si()));
        k.hi.push_back(T(hi[i].get_si()));
    }
    k.init_tails();
    return k;
}

template <>
CountKernel<Int> make_kernel<Int>(const Polytope& p, const std::vector<Int>& lo,
                                  const std::vector<Int>& hi) {
    CountKernel<Int> k;
    k.n = p.dim();
    for (const Facet& f : p.facets()) {
        k.normals.push_back(f.normal);
        k.offsets.push_back(f.offset);
    }
    k.lo = lo;
    k.hi = hi;
    k.init_tails();
    return k;
}

bool fits_int64(const Polytope& p, const std::vector<Int>& lo, const std::vector<Int>& hi) {
    Int bound = 0;
    for (const Facet& f : p.facets()) {
        Int s = abs(f.offset);
        for (size_t i = 0; i < p.dim(); ++i) {
            Int m = std::max(abs(lo[i]), abs(hi[i]));
            s += abs(f.normal[i]) * m;
        }
        bound = std::max(bound, s);
    }
    return bound < Int("2305843009213693952");  // 2^61
}

template <typename T>
Int count_with_kernel(const Polytope& p, bool parallel) {
    std::vector<Int> lo, hi;
    box_of(p, lo, hi);
    CountKernel<T> k = make_kernel<T>(p, lo, hi);
    size_t nf = k.normals.size();
    if (p.dim() == 1) {
        std::vector<T> partial = k.offsets;
        return to_int(k.count(0, partial));
    }
    // Shard the outermost coordinate.
    long span = static_cast<long>(mpz_get_si(Int(hi[0] - lo[0] + 1).get_mpz_t()));
    std::vector<Int> partial_sums(static_cast<size_t>(span), Int(0));
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long s = 0; s < span; ++s) {
        T v = k.lo[0] + T(s);
        std::vector<T> partial(nf);
        bool ok = true;
        for (size_t f = 0; f < nf; ++f) {
            partial[f] = k.offsets[f] + k.normals[f][0] * v;
            if (partial[f] + k.tail_max[f][1] < 0) { ok = false; break; }
        }
        if (ok) partial_sums[static_cast<size_t>(s)] = to_int(k.count(1, partial));
    }
    Int total = 0;
    for (const Int& c : partial_sums) total += c;
    return total;
}

Int count_impl(const Polytope& p, bool parallel) {
    std::vector<Int> lo, hi;
    box_of(p, lo, hi);
    if (fits_int64(p, lo, hi)) return count_with_kernel<long long>(p, parallel);
    return count_with_kernel<Int>(p, parallel);
}

}  // namespace

std::vector<LatticeVec> lattice_points(const Polytope& p) {
    std::vector<Int> lo, hi;
    box_of(p, lo, hi);
    std::vector<LatticeVec> out;
    LatticeVec x(p.dim());
    enumerate_rec(p, lo, hi, x, 0, out);
    return out;  // lex order by construction
}

Int count_lattice_points(const Polytope& p) { return count_impl(p, true); }
Int count_lattice_points_serial(const Polytope& p) { return count_impl(p, false); }

std::vector<LatticeVec> indexed_points(const Polytope& p) {
    std::vector<LatticeVec> pts = lattice_points(p);
    LatticeVec zero(p.dim(), Int(0));
    auto it = std::find(pts.begin(), pts.end(), zero);
    require(it != pts.end(), "indexed_points: polytope does not contain the origin");
    pts.erase(it);
    pts.insert(pts.begin(), zero);
    return pts;
}

bool is_reflexive(const Polytope& p) {
    if (!p.strictly_contains_origin()) return false;
    for (const Facet& f : p.facets())
        if (f.offset != vec_gcd(f.normal)) return false;
    return true;
}

Polytope dual_polytope(const Polytope& p) {
    require(is_reflexive(p), "dual_polytope: input not reflexive");
    std::vector<LatticeVec> verts;
    for (const Facet& f : p.facets()) verts.push_back(primitivize(f.normal));
    return Polytope(std::move(verts));
}

FacePoset::FacePoset(Polytope p) : poly_(std::move(p)) {
    size_t nv = poly_.vertices().size();
    std::vector<std::vector<size_t>> facet_verts(poly_.facets().size());
    for (size_t f = 0; f < poly_.facets().size(); ++f)
        for (size_t v = 0; v < nv; ++v)
            if (poly_.on_facet(f, poly_.vertices()[v])) facet_verts[f].push_back(v);

    std::set<std::vector<size_t>> sets;
    std::vector<size_t> all(nv);
    for (size_t v = 0; v < nv; ++v) all[v] = v;
    sets.insert(all);
    for (const auto& fv : facet_verts) sets.insert(fv);
    // Closure under intersection: every proper face is an intersection of
    // facets containing it.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<size_t>> cur(sets.begin(), sets.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<size_t> inter;
                std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(),
                                      cur[j].end(), std::back_inserter(inter));
                if (sets.insert(inter).second) grew = true;
            }
    }
    sets.insert({});

    for (const auto& s : sets) {
        Face f;
        f.vertex_idx = s;
        if (s.empty()) {
            f.dim = -1;
        } else if (s.size() == 1) {
            f.dim = 0;
        } else {
            std::vector<std::vector<Int>> diffs;
            for (size_t i = 1; i < s.size(); ++i)
                diffs.push_back(vsub(poly_.vertices()[s[i]], poly_.vertices()[s[0]]));
            f.dim = static_cast<int>(zrank(diffs));
        }
        for (size_t ff = 0; ff < facet_verts.size(); ++ff)
            if (std::includes(facet_verts[ff].begin(), facet_verts[ff].end(),
                              s.begin(), s.end()))
                f.active_facets.push_back(ff);
        faces_.push_back(std::move(f));
    }
    std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertex_idx < b.vertex_idx;
    });

    size_t nf = faces_.size();
    leq_.assign(nf, std::vector<bool>(nf, false));
    std::vector<int> ranks(nf);
    for (size_t a = 0; a < nf; ++a) {
        ranks[a] = faces_[a].dim + 1;
        for (size_t b = 0; b < nf; ++b)
            leq_[a][b] = std::includes(faces_[b].vertex_idx.begin(), faces_[b].vertex_idx.end(),
                                       faces_[a].vertex_idx.begin(), faces_[a].vertex_idx.end());
    }
    bottom_ = 0;
    top_ = nf - 1;
    poset_ = EulerianPoset(leq_, ranks);
    check(poset_.bottom() == bottom_ && poset_.top() == top_, "face poset: bad bounds");
}

std::vector<size_t> FacePoset::face_point_indices(size_t a,
                                                  const std::vector<LatticeVec>& pts) const {
    std::vector<size_t> out;
    if (faces_[a].dim < 0) return out;
    for (size_t i = 0; i < pts.size(); ++i)
        if (point_on_face(a, pts[i])) out.push_back(i);
    return out;
}

bool FacePoset::point_on_face(size_t a, const LatticeVec& x) const {
    if (faces_[a].dim < 0) return false;
    if (!poly_.contains(x)) return false;
    for (size_t f : faces_[a].active_facets)
        if (!poly_.on_facet(f, x)) return false;
    return true;
}

std::vector<LatticeVec> FacePoset::face_vertices(size_t a) const {
    std::vector<LatticeVec> out;
    for (size_t v : faces_[a].vertex_idx) out.push_back(poly_.vertices()[v]);
    return out;
}

Polytope FacePoset::face_polytope(size_t a) const {
    require(faces_[a].dim >= 1, "face_polytope: needs a face of dimension >= 1");
    std::vector<LatticeVec> verts = face_vertices(a);
    std::vector<LatticeVec> diffs;
    for (size_t i = 1; i < verts.size(); ++i) diffs.push_back(vsub(verts[i], verts[0]));
    std::vector<LatticeVec> basis = saturated_lattice_basis(diffs);
    std::vector<LatticeVec> coords;
    for (const auto& v : verts) coords.push_back(lattice_coordinates(basis, vsub(v, verts[0])));
    return Polytope(std::move(coords));
}

FacePoset face_poset(const Polytope& p) { return FacePoset(p); }

std::vector<LatticeVec> saturated_lattice_basis(const std::vector<LatticeVec>& span) {
    require(!span.empty(), "saturated_lattice_basis: empty span");
    size_t n = span[0].size();
    QMatrix s(span.size(), n);
    for (size_t i = 0; i < span.size(); ++i)
        for (size_t j = 0; j < n; ++j) s[i][j] = Rat(span[i][j]);
    std::vector<std::vector<Rat>> null = qkernel(s);
    if (null.empty()) {
        std::vector<LatticeVec> id(n, LatticeVec(n, Int(0)));
        for (size_t i = 0; i < n; ++i) id[i][i] = 1;
        return id;
    }
    std::vector<std::vector<Int>> z;
    for (const auto& row : null) z.push_back(primitivize(row));
    return zkernel(z);
}

LatticeVec lattice_coordinates(const std::vector<LatticeVec>& basis, const LatticeVec& x) {
    size_t n = x.size(), k = basis.size();
    std::vector<std::vector<Int>> m(n, std::vector<Int>(k));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
    auto sol = zsolve(m, x);
    require(sol.has_value(), "lattice_coordinates: x outside the spanned space");
    LatticeVec y(k);
    for (size_t j = 0; j < k; ++j) {
        require((*sol)[j].get_den() == 1, "lattice_coordinates: x outside the lattice");
        y[j] = (*sol)[j].get_num();
    }
    return y;
}

namespace {

using SimplexList = std::vector<std::vector<size_t>>;

// Pulling triangulation: every face is coned from its lex-least vertex.
const SimplexList& pull_face(const FacePoset& fp, size_t a,
                             std::map<size_t, SimplexList>& memo) {
    auto it = memo.find(a);
    if (it != memo.end()) return it->second;
    const auto& face = fp.faces()[a];
    SimplexList out;
    if (static_cast<int>(face.vertex_idx.size()) == face.dim + 1) {
        out.push_back(face.vertex_idx);
    } else {
        size_t vstar = face.vertex_idx.front();
        for (size_t b = 0; b < fp.size(); ++b) {
            if (b == a || !fp.leq(b, a) || fp.faces()[b].dim != face.dim - 1) continue;
            const auto& bv = fp.faces()[b].vertex_idx;
            if (std::binary_search(bv.begin(), bv.end(), vstar)) continue;
            for (const auto& s : pull_face(fp, b, memo)) {
                std::vector<size_t> t = s;
                t.push_back(vstar);
                std::sort(t.begin(), t.end());
                out.push_back(std::move(t));
            }
        }
    }
    return memo[a] = std::move(out);
}

}  // namespace

Int normalized_volume(const Polytope& p) {
    FacePoset fp(p);
    std::map<size_t, SimplexList> memo;
    const SimplexList& tris = pull_face(fp, fp.top(), memo);
    Int vol = 0;
    for (const auto& s : tris) {
        std::vector<LatticeVec> pts;
        for (size_t v : s) pts.push_back(p.vertices()[v]);
        vol += normalized_volume_simplex(pts);
    }
    return vol;
}

Int normalized_volume_simplex(const std::vector<LatticeVec>& pts) {
    if (pts.empty()) return 0;
    size_t n = pts[0].size();
    if (pts.size() != n + 1) return 0;
    std::vector<std::vector<Int>> m;
    for (size_t i = 1; i < pts.size(); ++i) m.push_back(vsub(pts[i], pts[0]));
    return abs(zdet(m));
}

Int normalized_volume_in_own_lattice(const std::vector<LatticeVec>& pts) {
    if (pts.size() <= 1) return pts.size() == 1 ? 1 : 0;
    std::vector<LatticeVec> diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(vsub(pts[i], pts[0]));
    std::vector<LatticeVec> basis = saturated_lattice_basis(diffs);
    if (basis.size() != pts.size() - 1) return 0;  // degenerate
    std::vector<std::vector<Int>> m;
    for (const auto& d : diffs) m.push_back(lattice_coordinates(basis, d));
    return abs(zdet(m));
}

}  // namespace reflex
