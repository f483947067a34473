#include "reflex/cohom.hpp"

#include <algorithm>
#include <functional>

namespace reflex {

bool RingClass::is_zero() const {
    for (const auto& deg : coords)
        for (const Rat& c : deg)
            if (c != 0) return false;
    return true;
}

RingClass& RingClass::operator+=(const RingClass& o) {
    check(coords.size() == o.coords.size(), "ring class: mixed rings");
    for (size_t k = 0; k < coords.size(); ++k)
        for (size_t j = 0; j < coords[k].size(); ++j) coords[k][j] += o.coords[k][j];
    return *this;
}

RingClass& RingClass::operator-=(const RingClass& o) {
    check(coords.size() == o.coords.size(), "ring class: mixed rings");
    for (size_t k = 0; k < coords.size(); ++k)
        for (size_t j = 0; j < coords[k].size(); ++j) coords[k][j] -= o.coords[k][j];
    return *this;
}

RingClass operator*(const Rat& s, RingClass x) {
    for (auto& deg : x.coords)
        for (Rat& c : deg) c *= s;
    return x;
}

namespace {

// Relation rows of degree k: one per (tau, m) with tau a (k-1)-cone and m a
// lattice basis vector of tau^perp.
std::vector<std::vector<std::pair<size_t, Rat>>> relation_rows(
    const Fan& fan, const std::vector<std::vector<Cone>>& cones,
    const std::map<Cone, size_t>& index_k, size_t k) {
    std::vector<std::vector<std::pair<size_t, Rat>>> rows;
    size_t n = fan.dim();
    for (const Cone& tau : cones[k - 1]) {
        std::vector<LatticeVec> perp;
        if (tau.empty()) {
            perp.assign(n, LatticeVec(n, Int(0)));
            for (size_t i = 0; i < n; ++i) perp[i][i] = 1;
        } else {
            std::vector<std::vector<Int>> m;
            for (size_t r : tau) m.push_back(fan.rays[r]);
            perp = zkernel(m);
        }
        for (const LatticeVec& m : perp) {
            std::vector<std::pair<size_t, Rat>> row;
            for (size_t r = 0; r < fan.rays.size(); ++r) {
                if (std::binary_search(tau.begin(), tau.end(), r)) continue;
                Cone c = tau;
                c.push_back(r);
                std::sort(c.begin(), c.end());
                auto it = index_k.find(c);
                if (it == index_k.end()) continue;
                Int coeff = dot(m, fan.rays[r]);
                if (coeff != 0) row.push_back({it->second, Rat(coeff)});
            }
            if (!row.empty()) {
                std::sort(row.begin(), row.end());
                // merge duplicated columns (tau + r can coincide only once, but
                // keep the merge for safety)
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

}  // namespace

CohomRing::CohomRing(const Fan& fan) : fan_(fan) {
    require(is_smooth(fan_), "cohomology ring: fan must be smooth");
    require(is_complete_check(fan_), "cohomology ring: fan must be complete");
    n_ = fan_.dim();
    cones_ = cones_by_dimension(fan_);
    cone_index_.resize(n_ + 1);
    for (size_t k = 0; k <= n_; ++k)
        for (size_t i = 0; i < cones_[k].size(); ++i) cone_index_[k][cones_[k][i]] = i;

    basis_.resize(n_ + 1);
    nf_rows_.resize(n_ + 1);
    nf_pivots_.resize(n_ + 1);
    dims_.assign(n_ + 1, 0);
    for (size_t k = 0; k <= n_; ++k) {
        size_t ncols = cones_[k].size();
        if (k == 0) {
            basis_[k] = {0};
            dims_[k] = 1;
            continue;
        }
        auto rows = relation_rows(fan_, cones_, cone_index_[k], k);
        QMatrix m(rows.size(), ncols);
        for (size_t i = 0; i < rows.size(); ++i)
            for (const auto& [j, v] : rows[i]) m[i][j] += v;
        Echelon e = rref(std::move(m));
        std::vector<bool> is_pivot(ncols, false);
        for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
            is_pivot[e.pivot_cols[i]] = true;
            nf_rows_[k].push_back(e.m[i]);
            nf_pivots_[k].push_back(e.pivot_cols[i]);
        }
        for (size_t j = 0; j < ncols; ++j)
            if (!is_pivot[j]) basis_[k].push_back(j);
        dims_[k] = basis_[k].size();
    }
    check(dims_[0] == 1 && dims_[n_] == 1, "cohomology ring: extreme degrees not 1-dimensional");
    check(total_dim() == fan_.max_cones.size(),
          "cohomology ring: total dimension differs from the maximal cone count");
    for (size_t k = 0; k <= n_; ++k)
        check(dims_[k] == dims_[n_ - k], "cohomology ring: dimensions not palindromic");

    // Multiplication matrices per divisor and degree.
    size_t p = fan_.rays.size();
    mult_.assign(p, std::vector<QMatrix>(n_ + 1));
    antican_.assign(n_ + 1, QMatrix());
    for (size_t k = 0; k <= n_; ++k) {
        size_t dk = dims_[k], dk1 = (k + 1 <= n_) ? dims_[k + 1] : 0;
        for (size_t r = 0; r < p; ++r) mult_[r][k] = QMatrix(dk1, dk);
        antican_[k] = QMatrix(dk1, dk);
        if (k == n_) continue;
        for (size_t b = 0; b < dk; ++b) {
            const Cone& sigma = cones_[k][basis_[k][b]];
            for (size_t r = 0; r < p; ++r) {
                std::vector<Rat> img = normal_form(k + 1, divisor_image_span(k, sigma, r));
                for (size_t j = 0; j < dk1; ++j) {
                    Rat v = img[basis_[k + 1][j]];
                    mult_[r][k][j][b] = v;
                    antican_[k][j][b] += v;
                }
            }
        }
    }
}

size_t CohomRing::total_dim() const {
    size_t s = 0;
    for (size_t d : dims_) s += d;
    return s;
}

std::vector<Rat> CohomRing::normal_form(size_t k, std::vector<Rat> v) const {
    for (size_t i = 0; i < nf_rows_[k].size(); ++i) {
        Rat c = v[nf_pivots_[k][i]];
        if (c == 0) continue;
        const std::vector<Rat>& row = nf_rows_[k][i];
        for (size_t j = 0; j < v.size(); ++j)
            if (row[j] != 0) v[j] -= c * row[j];
    }
    return v;
}

std::vector<Rat> CohomRing::divisor_image_span(size_t k, const Cone& sigma, size_t ray) const {
    std::vector<Rat> img(cones_[k + 1].size(), Rat(0));
    auto add_completion = [&](size_t r, const Rat& coeff) {
        Cone c = sigma;
        c.push_back(r);
        std::sort(c.begin(), c.end());
        auto it = cone_index_[k + 1].find(c);
        if (it != cone_index_[k + 1].end()) img[it->second] += coeff;
    };
    if (!std::binary_search(sigma.begin(), sigma.end(), ray)) {
        add_completion(ray, Rat(1));
        return img;
    }
    // Rewrite D_ray using a character that is 1 on this ray and 0 on the rest
    // of sigma, then multiply the surviving divisors.
    QMatrix m(sigma.size(), n_);
    std::vector<Rat> rhs(sigma.size(), Rat(0));
    for (size_t i = 0; i < sigma.size(); ++i) {
        for (size_t j = 0; j < n_; ++j) m[i][j] = Rat(fan_.rays[sigma[i]][j]);
        if (sigma[i] == ray) rhs[i] = 1;
    }
    auto mvec = solve(m, rhs);
    check(mvec.has_value(), "cohomology ring: dual character solve failed");
    for (size_t r = 0; r < fan_.rays.size(); ++r) {
        if (std::binary_search(sigma.begin(), sigma.end(), r)) continue;
        Rat coeff = 0;
        for (size_t j = 0; j < n_; ++j) coeff += (*mvec)[j] * Rat(fan_.rays[r][j]);
        if (coeff != 0) add_completion(r, -coeff);
    }
    return img;
}

RingClass CohomRing::zero() const {
    RingClass x;
    x.coords.resize(n_ + 1);
    for (size_t k = 0; k <= n_; ++k) x.coords[k].assign(dims_[k], Rat(0));
    return x;
}

RingClass CohomRing::one() const {
    RingClass x = zero();
    x.coords[0][0] = 1;
    return x;
}

RingClass CohomRing::orbit_class(const Cone& sigma) const {
    size_t k = sigma.size();
    require(k <= n_, "orbit_class: cone too large");
    auto it = cone_index_[k].find(sigma);
    require(it != cone_index_[k].end(), "orbit_class: not a cone of the fan");
    std::vector<Rat> span(cones_[k].size(), Rat(0));
    span[it->second] = 1;
    std::vector<Rat> nf = normal_form(k, std::move(span));
    RingClass x = zero();
    for (size_t j = 0; j < dims_[k]; ++j) x.coords[k][j] = nf[basis_[k][j]];
    return x;
}

RingClass CohomRing::cup_divisor(const RingClass& x, size_t i) const {
    require(i <= fan_.rays.size(), "cup_divisor: divisor index out of range");
    RingClass y = zero();
    for (size_t k = 0; k + 1 <= n_; ++k) {
        const QMatrix& m = (i == 0) ? antican_[k] : mult_[i - 1][k];
        for (size_t row = 0; row < dims_[k + 1]; ++row) {
            Rat s = 0;
            for (size_t col = 0; col < dims_[k]; ++col)
                if (m[row][col] != 0 && x.coords[k][col] != 0)
                    s += m[row][col] * x.coords[k][col];
            y.coords[k + 1][row] = (i == 0) ? -s : s;
        }
    }
    return y;
}

CupRank anticanonical_cup_rank(const CohomRing& ring) {
    CupRank r;
    r.total = 0;
    for (size_t k = 0; k + 1 <= ring.ambient_dim(); ++k) {
        size_t rk = qrank(ring.anticanonical_matrix(k));
        r.per_degree.push_back(rk);
        r.total += Int(rk);
    }
    r.per_degree.push_back(0);  // top degree maps to zero
    return r;
}

namespace {

const Rat* sparse_get(const SparseRow& row, size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& pr, size_t c) { return pr.first < c; });
    if (it != row.end() && it->first == col) return &it->second;
    return nullptr;
}

}  // namespace

size_t sparse_rank(std::vector<SparseRow> rows) {
    size_t nrows = rows.size();
    std::vector<bool> active(nrows, true);
    // column -> candidate rows (stale entries tolerated, re-checked on use)
    std::map<size_t, std::vector<size_t>> col_rows;
    for (size_t i = 0; i < nrows; ++i)
        for (const auto& [c, v] : rows[i]) col_rows[c].push_back(i);

    size_t rank = 0;
    while (true) {
        size_t best = SIZE_MAX;
        for (size_t i = 0; i < nrows; ++i) {
            if (!active[i] || rows[i].empty()) continue;
            if (best == SIZE_MAX || rows[i].size() < rows[best].size()) best = i;
        }
        if (best == SIZE_MAX) break;
        // pivot column: fewest active occupants (Markowitz-style fill control)
        size_t pcol = SIZE_MAX, pcount = SIZE_MAX;
        for (const auto& [c, v] : rows[best]) {
            size_t cnt = 0;
            for (size_t i : col_rows[c])
                if (active[i] && i != best && sparse_get(rows[i], c)) ++cnt;
            if (cnt < pcount) { pcount = cnt; pcol = c; }
        }
        Rat pval = *sparse_get(rows[best], pcol);
        std::vector<size_t> candidates = col_rows[pcol];
        for (size_t i : candidates) {
            if (!active[i] || i == best) continue;
            const Rat* pv = sparse_get(rows[i], pcol);
            if (!pv) continue;
            Rat f = *pv / pval;
            SparseRow merged;
            merged.reserve(rows[i].size() + rows[best].size());
            auto a = rows[i].begin(), ae = rows[i].end();
            auto b = rows[best].begin(), be = rows[best].end();
            while (a != ae || b != be) {
                if (b == be || (a != ae && a->first < b->first)) {
                    merged.push_back(*a++);
                } else if (a == ae || b->first < a->first) {
                    Rat nv = -f * b->second;
                    if (nv != 0) {
                        col_rows[b->first].push_back(i);
                        merged.push_back({b->first, nv});
                    }
                    ++b;
                } else {
                    Rat nv = a->second - f * b->second;
                    if (nv != 0) merged.push_back({a->first, nv});
                    ++a;
                    ++b;
                }
            }
            rows[i] = std::move(merged);
        }
        active[best] = false;
        ++rank;
    }
    return rank;
}

namespace {

std::vector<SparseRow> sparse_relation_rows(const Fan& fan,
                                            const std::vector<std::vector<Cone>>& cones,
                                            const std::map<Cone, size_t>& index_k, size_t k) {
    auto raw = relation_rows(fan, cones, index_k, k);
    std::vector<SparseRow> rows;
    rows.reserve(raw.size());
    for (auto& r : raw) rows.push_back(std::move(r));
    return rows;
}

}  // namespace

CupRank anticanonical_cup_rank_sparse(const Fan& fan) {
    require(is_smooth(fan), "cup rank: fan must be smooth");
    require(is_complete_check(fan), "cup rank: fan must be complete");
    size_t n = fan.dim();
    auto cones = cones_by_dimension(fan);
    std::vector<std::map<Cone, size_t>> index(n + 1);
    for (size_t k = 0; k <= n; ++k)
        for (size_t i = 0; i < cones[k].size(); ++i) index[k][cones[k][i]] = i;

    CupRank out;
    out.total = 0;
    for (size_t k = 0; k + 1 <= n; ++k) {
        std::vector<SparseRow> rel = sparse_relation_rows(fan, cones, index[k + 1], k + 1);
        size_t rank_rel = sparse_rank(rel);

        std::vector<SparseRow> both = rel;
        for (const Cone& sigma : cones[k]) {
            // image of [V(sigma)] under sum of all divisors
            std::map<size_t, Rat> img;
            auto add = [&](size_t r, const Rat& coeff) {
                Cone c = sigma;
                c.push_back(r);
                std::sort(c.begin(), c.end());
                auto it = index[k + 1].find(c);
                if (it != index[k + 1].end()) img[it->second] += coeff;
            };
            for (size_t r = 0; r < fan.rays.size(); ++r)
                if (!std::binary_search(sigma.begin(), sigma.end(), r)) add(r, Rat(1));
            for (size_t ri = 0; ri < sigma.size(); ++ri) {
                QMatrix m(sigma.size(), n);
                std::vector<Rat> rhs(sigma.size(), Rat(0));
                for (size_t i = 0; i < sigma.size(); ++i)
                    for (size_t j = 0; j < n; ++j) m[i][j] = Rat(fan.rays[sigma[i]][j]);
                rhs[ri] = 1;
                auto mvec = solve(m, rhs);
                check(mvec.has_value(), "cup rank: dual character solve failed");
                for (size_t r = 0; r < fan.rays.size(); ++r) {
                    if (std::binary_search(sigma.begin(), sigma.end(), r)) continue;
                    Rat coeff = 0;
                    for (size_t j = 0; j < n; ++j) coeff += (*mvec)[j] * Rat(fan.rays[r][j]);
                    if (coeff != 0) add(r, -coeff);
                }
            }
            SparseRow row;
            for (const auto& [c, v] : img)
                if (v != 0) row.push_back({c, v});
            if (!row.empty()) both.push_back(std::move(row));
        }
        size_t rank_both = sparse_rank(std::move(both));
        out.per_degree.push_back(rank_both - rank_rel);
        out.total += Int(rank_both - rank_rel);
    }
    out.per_degree.push_back(0);
    return out;
}

RingClass o_ell(const CohomRing& ring, const Relation& ell) {
    require(ell.size() == ring.num_divisors() + 1, "o_ell: relation length mismatch");
    require(ell[0] <= 0, "o_ell: positive entry at index 0");
    size_t n = ring.ambient_dim();
    RingClass x = ring.one();
    auto mul_shifted = [&](const RingClass& v, size_t i, const Rat& shift) {
        RingClass y = ring.cup_divisor(v, i);
        y += shift * v;
        return y;
    };
    for (size_t i = 1; i < ell.size(); ++i) {
        if (ell[i] < 0) {
            // D_i (D_i - 1) ... (D_i + ell_i + 1)
            for (Int k = 0; k < -ell[i]; ++k) x = mul_shifted(x, i, Rat(-k));
        } else if (ell[i] > 0) {
            // ((D_i + 1) ... (D_i + ell_i))^{-1} via geometric expansion
            for (Int k = 1; k <= ell[i]; ++k) {
                Rat kk(k);
                RingClass acc = ring.zero();
                RingClass t = x;
                Rat pw = 1 / kk;
                acc += pw * t;
                for (size_t j = 1; j <= n; ++j) {
                    t = ring.cup_divisor(t, i);
                    pw /= -kk;
                    acc += pw * t;
                }
                x = acc;
            }
        }
    }
    for (Int k = 1; k <= -ell[0]; ++k) x = mul_shifted(x, 0, Rat(-k));
    return x;
}

std::vector<size_t> brute_force_graded_dims(const Fan& fan, size_t max_degree) {
    size_t p = fan.rays.size(), n = fan.dim();
    auto collections = primitive_collections(fan);
    // monomial = sorted multiset of variable indices 0..p-1
    std::vector<size_t> dims{1};
    std::vector<std::vector<size_t>> prev{{}};  // degree 0
    for (size_t deg = 1; deg <= std::min(max_degree, n); ++deg) {
        std::vector<std::vector<size_t>> mons;
        std::map<std::vector<size_t>, size_t> index;
        std::vector<size_t> mon;
        // multisets in lex order
        std::function<void(size_t)> gen = [&](size_t from) {
            if (mon.size() == deg) {
                index[mon] = mons.size();
                mons.push_back(mon);
                return;
            }
            for (size_t v = from; v < p; ++v) {
                mon.push_back(v);
                gen(v);
                mon.pop_back();
            }
        };
        gen(0);

        std::vector<SparseRow> rows;
        // linear relations times degree-(deg-1) monomials
        for (size_t j = 0; j < n; ++j)
            for (const auto& m0 : prev) {
                std::map<size_t, Rat> row;
                for (size_t v = 0; v < p; ++v) {
                    Int c = fan.rays[v][j];
                    if (c == 0) continue;
                    std::vector<size_t> m = m0;
                    m.push_back(v);
                    std::sort(m.begin(), m.end());
                    row[index[m]] += Rat(c);
                }
                SparseRow r(row.begin(), row.end());
                if (!r.empty()) rows.push_back(std::move(r));
            }
        // Stanley-Reisner monomials times complementary monomials
        for (const auto& col : collections) {
            if (col.size() > deg) continue;
            size_t rest = deg - col.size();
            std::vector<std::vector<size_t>> fillers;
            std::vector<size_t> f;
            std::function<void(size_t)> genf = [&](size_t from) {
                if (f.size() == rest) {
                    fillers.push_back(f);
                    return;
                }
                for (size_t v = from; v < p; ++v) {
                    f.push_back(v);
                    genf(v);
                    f.pop_back();
                }
            };
            genf(0);
            for (const auto& fill : fillers) {
                std::vector<size_t> m = col;
                m.insert(m.end(), fill.begin(), fill.end());
                std::sort(m.begin(), m.end());
                rows.push_back({{index[m], Rat(1)}});
            }
        }
        dims.push_back(mons.size() - sparse_rank(std::move(rows)));
        prev = std::move(mons);
    }
    return dims;
}

}  // namespace reflex
