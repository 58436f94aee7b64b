#include "brieskorn/newton.hpp"

#include "brieskorn/errors.hpp"
#include "brieskorn/groebner.hpp"
#include "brieskorn/matrix.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace brieskorn {

namespace {

Point to_point(const Exponent& e) { return Point(e.begin(), e.end()); }

std::size_t affine_rank(const std::vector<Point>& pts) {
    if (pts.size() < 2) return 0;
    std::size_t dim = pts.front().size();
    QMatrix m(pts.size() - 1, dim);
    for (std::size_t k = 1; k < pts.size(); ++k)
        for (std::size_t j = 0; j < dim; ++j) m(k - 1, j) = pts[k][j] - pts[0][j];
    return rank(m);
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

Integer factorial(std::size_t k) {
    Integer f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

// Coordinates of `pts` in an affine frame of their hull.
std::vector<Point> reparametrize(const std::vector<Point>& pts) {
    std::size_t dim = pts.front().size();
    QMatrix diffs(dim, pts.size() - 1);
    for (std::size_t k = 1; k < pts.size(); ++k)
        for (std::size_t j = 0; j < dim; ++j) diffs(j, k - 1) = pts[k][j] - pts[0][j];
    Echelon e = row_echelon(diffs);
    QMatrix frame(dim, e.pivots.size());
    for (std::size_t c = 0; c < e.pivots.size(); ++c)
        for (std::size_t j = 0; j < dim; ++j) frame(j, c) = diffs(j, e.pivots[c]);
    std::vector<Point> out;
    for (const auto& p : pts) {
        std::vector<Rational> rhs(dim);
        for (std::size_t j = 0; j < dim; ++j) rhs[j] = p[j] - pts[0][j];
        out.push_back(*solve(frame, rhs));
    }
    return out;
}

// Pulling triangulation from the first point; simplices as index lists.
void triangulate(const std::vector<Point>& pts, const std::vector<std::size_t>& ids,
                 std::vector<std::vector<std::size_t>>& out) {
    std::size_t dim = pts.front().size();
    if (dim == 0) {
        out.push_back({ids.front()});
        return;
    }
    for (const auto& facet : convex_hull(pts)) {
        if (std::find(facet.points.begin(), facet.points.end(), 0) != facet.points.end()) continue;
        std::vector<Point> sub;
        std::vector<std::size_t> sub_ids;
        for (auto k : facet.points) {
            sub.push_back(pts[k]);
            sub_ids.push_back(ids[k]);
        }
        std::vector<std::vector<std::size_t>> faces;
        triangulate(reparametrize(sub), sub_ids, faces);
        for (auto& s : faces) {
            s.insert(s.begin(), ids.front());
            out.push_back(std::move(s));
        }
    }
}

std::string format_form(const std::vector<Rational>& c, const Rational& b) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "(") << to_string(c[i]);
    os << ") . a = " << to_string(b);
    return os.str();
}

std::optional<std::size_t> missing_axis(const std::vector<Exponent>& support, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        bool hit = false;
        for (const auto& a : support) {
            bool on_axis = a[i] > 0;
            for (std::size_t j = 0; j < n && on_axis; ++j)
                if (j != i && a[j] != 0) on_axis = false;
            hit = hit || on_axis;
        }
        if (!hit) return i;
    }
    return std::nullopt;
}

}  // namespace

std::vector<HullFacet> convex_hull(const std::vector<Point>& points) {
    if (points.empty()) throw DimensionError("convex hull of an empty point set");
    std::size_t dim = points.front().size();
    if (dim == 0) return {};
    if (affine_rank(points) != dim) throw DimensionError("point set is not full-dimensional");
    std::vector<HullFacet> facets;
    std::set<std::vector<std::size_t>> seen;
    for_each_subset(points.size(), dim, [&](const std::vector<std::size_t>& sub) {
        QMatrix m(dim, dim + 1);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t j = 0; j < dim; ++j) m(r, j) = points[sub[r]][j];
            m(r, dim) = -1;
        }
        auto ns = nullspace(m);
        if (ns.size() != 1) return;
        Point c(ns[0].begin(), ns[0].begin() + static_cast<long>(dim));
        Rational b = ns[0][dim];
        int side = 0;
        std::vector<std::size_t> on;
        for (std::size_t k = 0; k < points.size(); ++k) {
            Rational s = -b;
            for (std::size_t j = 0; j < dim; ++j) s += c[j] * points[k][j];
            int sg = sgn(s);
            if (sg == 0) {
                on.push_back(k);
            } else if (side == 0) {
                side = sg;
            } else if (side != sg) {
                return;
            }
        }
        if (!seen.insert(on).second) return;
        if (side > 0) {
            for (auto& v : c) v = -v;
            b = -b;
        }
        facets.push_back({std::move(c), std::move(b), std::move(on)});
    });
    return facets;
}

Rational polytope_volume(const std::vector<Point>& points) {
    std::size_t dim = points.front().size();
    std::vector<std::size_t> ids(points.size());
    for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = k;
    std::vector<std::vector<std::size_t>> simplices;
    triangulate(points, ids, simplices);
    Rational vol = 0;
    for (const auto& s : simplices) {
        QMatrix m(dim, dim);
        for (std::size_t r = 1; r <= dim; ++r)
            for (std::size_t j = 0; j < dim; ++j) m(r - 1, j) = points[s[r]][j] - points[s[0]][j];
        vol += abs(determinant(m));
    }
    return vol / Rational(factorial(dim));
}

std::pair<Rational, std::size_t> NewtonPolyhedron::weight(const Exponent& a) const {
    if (a.size() != n_) throw DimensionError("exponent length does not match the polyhedron");
    Rational best = 0;
    std::size_t at = 0;
    for (std::size_t k = 0; k < facets_.size(); ++k) {
        Rational v = 0;
        for (std::size_t i = 0; i < n_; ++i)
            if (a[i] != 0) v += facets_[k].L[i] * a[i];
        if (k == 0 || v > best) {
            best = v;
            at = k;
        }
    }
    return {best, at};
}

NewtonPolyhedron build_polyhedron(const LaurentPoly& f) {
    if (f.r() != 0) throw DimensionError("Newton polyhedron needs a parameter-free polynomial");
    if (f.is_zero()) throw HypothesisError("zero_polynomial", "the polynomial is zero");
    NewtonPolyhedron P;
    P.mode_ = f.mode();
    P.n_ = f.n();
    P.points_ = f.u_support();
    Exponent origin(P.n_, 0);
    if (P.mode_ == Mode::polynomial && std::find(P.points_.begin(), P.points_.end(), origin) == P.points_.end())
        P.points_.push_back(origin);
    std::sort(P.points_.begin(), P.points_.end());

    std::vector<Point> pts;
    for (const auto& a : P.points_) pts.push_back(to_point(a));
    if (affine_rank(pts) != P.n_)
        throw HypothesisError("not_full_dimensional", "the Newton polytope is not full-dimensional");
    P.hull_ = convex_hull(pts);

    if (P.mode_ == Mode::polynomial) {
        if (auto axis = missing_axis(f.u_support(), P.n_))
            throw HypothesisError("not_commode", "not commode: the Newton polyhedron does not meet the u" +
                                                     std::to_string(*axis + 1) + " axis away from 0");
    }
    for (const auto& h : P.hull_) {
        if (sgn(h.value) > 0) continue;
        if (P.mode_ == Mode::laurent)
            throw HypothesisError("not_commode", "not commode: the origin is not interior, facet " +
                                                     format_form(h.normal, h.value));
        std::size_t nonzero = 0;
        for (const auto& c : h.normal) nonzero += sgn(c) != 0;
        if (nonzero != 1)
            throw HypothesisError("facet_through_origin",
                                  "Newton-boundary facet through the origin: " + format_form(h.normal, h.value));
    }

    for (std::size_t k = 0; k < P.points_.size(); ++k) {
        QMatrix normals(0, P.n_);
        std::vector<std::vector<Rational>> rows;
        for (const auto& h : P.hull_)
            if (std::find(h.points.begin(), h.points.end(), k) != h.points.end()) rows.push_back(h.normal);
        QMatrix m(rows.size(), P.n_);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < P.n_; ++j) m(i, j) = rows[i][j];
        if (rank(m) == P.n_) P.vertices_.push_back(P.points_[k]);
    }

    for (const auto& h : P.hull_) {
        if (sgn(h.value) == 0) continue;
        Facet fc;
        for (const auto& c : h.normal) {
            fc.L.push_back(c / h.value);
            Integer den = fc.L.back().get_den();
            mpz_lcm(P.denominator_.get_mpz_t(), P.denominator_.get_mpz_t(), den.get_mpz_t());
        }
        for (auto k : h.points)
            if (std::find(P.vertices_.begin(), P.vertices_.end(), P.points_[k]) != P.vertices_.end())
                fc.vertices.push_back(P.points_[k]);
        P.facets_.push_back(std::move(fc));
    }
    return P;
}

CommodeVerdict is_commode(const LaurentPoly& f) {
    if (f.is_zero()) throw Error("commodeness of the zero polynomial");
    std::size_t n = f.n();
    auto support = f.u_support();
    if (f.mode() == Mode::polynomial) {
        if (auto axis = missing_axis(support, n))
            return {false, "no point of the Newton polyhedron on the u" + std::to_string(*axis + 1) + " axis"};
        return {true, ""};
    }
    std::vector<Point> pts;
    for (const auto& a : support) pts.push_back(to_point(a));
    if (affine_rank(pts) != n) return {false, "the Newton polytope is not full-dimensional"};
    for (const auto& h : convex_hull(pts))
        if (sgn(h.value) <= 0)
            return {false, "origin not interior; separating facet " + format_form(h.normal, h.value)};
    return {true, ""};
}

namespace {

WeightReport weight_of(const LaurentPoly& g, const NewtonPolyhedron& P, int shift) {
    if (g.n() != P.n()) throw DimensionError("polynomial and polyhedron dimensions differ");
    WeightReport rep;
    auto support = g.u_support();
    if (support.empty()) {
        rep.bottom = true;
        return rep;
    }
    bool first = true;
    for (auto a : support) {
        Exponent s = a;
        for (auto& v : s) v += shift;
        auto [w, facet] = P.weight(s);
        if (first || w > rep.value) {
            rep.value = w;
            rep.facet = facet;
            rep.witness = a;
            first = false;
        }
    }
    return rep;
}

}  // namespace

WeightReport phi(const LaurentPoly& g, const NewtonPolyhedron& P) { return weight_of(g, P, 0); }

WeightReport phi_star(const LaurentPoly& g, const NewtonPolyhedron& P) {
    if (P.mode() != Mode::polynomial) throw Error("phi* is defined in polynomial mode only");
    return weight_of(g, P, 1);
}

Rational phi_monomial(const Exponent& a, const NewtonPolyhedron& P) { return P.weight(a).first; }

Rational phi_star_monomial(const Exponent& a, const NewtonPolyhedron& P) {
    Exponent s = a;
    for (auto& v : s) v += 1;
    return P.weight(s).first;
}

Integer newton_number(const NewtonPolyhedron& P) {
    std::size_t n = P.n();
    Rational nu = 0;
    if (P.mode() == Mode::laurent) {
        std::vector<Point> pts;
        for (const auto& a : P.points()) pts.push_back(to_point(a));
        nu = Rational(factorial(n)) * polytope_volume(pts);
    } else {
        for (std::size_t k = 0; k <= n; ++k) {
            Rational vk = 0;
            if (k == 0) {
                vk = 1;
            } else {
                for_each_subset(n, k, [&](const std::vector<std::size_t>& coords) {
                    std::vector<Point> pts;
                    for (const auto& a : P.points()) {
                        bool inside = true;
                        for (std::size_t i = 0; i < n && inside; ++i)
                            if (a[i] != 0 && std::find(coords.begin(), coords.end(), i) == coords.end())
                                inside = false;
                        if (!inside) continue;
                        Point p;
                        for (auto i : coords) p.push_back(a[i]);
                        pts.push_back(std::move(p));
                    }
                    if (affine_rank(pts) != k)
                        throw HypothesisError("not_commode", "coordinate section of the Newton polyhedron is degenerate");
                    vk += polytope_volume(pts);
                });
            }
            Rational term = Rational(factorial(k)) * vk;
            nu += ((n - k) % 2 == 0) ? term : Rational(-term);
        }
    }
    if (nu.get_den() != 1) throw Error("Newton number is not an integer: " + to_string(nu));
    return nu.get_num();
}

SubdiagramVerdict is_subdiagram(const LaurentPoly& g, const NewtonPolyhedron& P) {
    SubdiagramVerdict v;
    auto add = [&](std::string name, const WeightReport& w, const Rational& rhs, bool required) {
        SubdiagramCheck c{std::move(name), w.bottom || w.value < rhs, w.bottom ? Rational(0) : w.value, rhs};
        v.checks.push_back(c);
        return c.ok || !required;
    };
    bool ok = add("phi(g) < 1", phi(g, P), 1, true);
    if (P.mode() == Mode::polynomial) {
        for (std::size_t i = 0; i < P.n(); ++i) {
            Exponent ui(P.n(), 0);
            ui[i] = 1;
            Rational bound = 1 - phi_monomial(ui, P);
            std::string idx = std::to_string(i + 1);
            ok = add("phi(dg/du" + idx + ") < 1 - phi(u" + idx + ")", phi(g.partial_derivative(i), P), bound, true) && ok;
            add("phi*(g) < 1 - phi(u" + idx + ")", phi_star(g, P), bound, false);
        }
    }
    v.ok = ok;
    return v;
}

std::string to_string(Tristate t) {
    switch (t) {
        case Tristate::yes: return "true";
        case Tristate::no: return "false";
        default: return "unknown";
    }
}

NondegeneracyVerdict is_nondegenerate(const LaurentPoly& f, std::size_t budget) {
    NewtonPolyhedron P = build_polyhedron(f);
    std::size_t n = P.n();
    std::vector<Point> pts;
    for (const auto& a : P.points()) pts.push_back(to_point(a));
    auto hull = convex_hull(pts);

    std::vector<std::vector<std::size_t>> weight_facets, all_facets;
    for (const auto& h : hull) {
        all_facets.push_back(h.points);
        if (sgn(h.value) > 0) weight_facets.push_back(h.points);
    }
    // faces = nonempty intersections of facets, kept if inside a weight facet
    std::set<std::vector<std::size_t>> faces(all_facets.begin(), all_facets.end());
    std::vector<std::vector<std::size_t>> frontier(faces.begin(), faces.end());
    while (!frontier.empty()) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& a : frontier)
            for (const auto& b : all_facets) {
                std::vector<std::size_t> c;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
                if (!c.empty() && faces.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }

    NondegeneracyVerdict verdict;
    verdict.verdict = Tristate::yes;
    auto grouped = f.grouped();
    for (const auto& face : faces) {
        bool in_weight_facet = false;
        for (const auto& w : weight_facets)
            in_weight_facet = in_weight_facet || std::includes(w.begin(), w.end(), face.begin(), face.end());
        if (!in_weight_facet) continue;
        Poly fs(n);
        std::vector<Exponent> verts;
        for (auto k : face) {
            const Exponent& a = P.points()[k];
            verts.push_back(a);
            auto it = grouped.find(a);
            if (it != grouped.end()) fs.add_term(a, it->second.constant_term());
        }
        ++verdict.faces_checked;
        if (fs.size() <= 1) continue;
        std::vector<Poly> gens;
        for (std::size_t i = 0; i < n; ++i) {
            Poly li(n);
            for (const auto& [e, c] : fs.terms())
                if (e[i] != 0) li.add_term(e, c * e[i]);
            if (!li.is_zero()) gens.push_back(clear_laurent(li, 1));
        }
        gens.push_back(torus_relation(n));
        try {
            GroebnerOptions opts;
            opts.budget = budget;
            opts.track_cofactors = false;
            MonomialOrder order{n};
            if (!GroebnerBasis::compute(gens, order, opts).contains_unit()) {
                verdict.verdict = Tristate::no;
                verdict.failing_face = verts;
                verdict.diagnostic = "face polynomial has a critical point on the torus";
                return verdict;
            }
        } catch (const BudgetExceeded&) {
            verdict.verdict = Tristate::unknown;
            verdict.failing_face = verts;
            verdict.diagnostic = "step budget exhausted on a face";
        }
    }
    return verdict;
}

}  // namespace brieskorn
