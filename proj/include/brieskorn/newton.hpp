#pragma once

#include "brieskorn/poly.hpp"
#include "brieskorn/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace brieskorn {

using Point = std::vector<Rational>;

/// Facet {a : normal . a = value} of a full-dimensional polytope, oriented so
/// that normal . a <= value on the polytope. `points` are the input indices on it.
struct HullFacet {
    Point normal;
    Rational value;
    std::vector<std::size_t> points;
};

/// Exact facet enumeration of conv(points); throws DimensionError unless the
/// hull is full-dimensional in Q^dim.
std::vector<HullFacet> convex_hull(const std::vector<Point>& points);

/// Euclidean volume of conv(points) (full-dimensional).
Rational polytope_volume(const std::vector<Point>& points);

/// A face of the Newton boundary with its weight form L (L = 1 on the facet).
struct Facet {
    std::vector<Rational> L;
    std::vector<Exponent> vertices;
};

class NewtonPolyhedron {
public:
    Mode mode() const { return mode_; }
    std::size_t n() const { return n_; }
    /// Extreme points of the hull (the origin included in polynomial mode).
    const std::vector<Exponent>& vertices() const { return vertices_; }
    /// Newton-boundary facets, i.e. those carrying a weight form.
    const std::vector<Facet>& facets() const { return facets_; }
    /// Support points of the polynomial (plus the origin in polynomial mode).
    const std::vector<Exponent>& points() const { return points_; }
    /// Common denominator of all weight forms: d * phi is integral on Z^n.
    const Integer& denominator() const { return denominator_; }

    /// max over facets of L(a) and the facet achieving it.
    std::pair<Rational, std::size_t> weight(const Exponent& a) const;

private:
    friend NewtonPolyhedron build_polyhedron(const LaurentPoly& f);
    Mode mode_ = Mode::laurent;
    std::size_t n_ = 0;
    std::vector<Exponent> points_;
    std::vector<Exponent> vertices_;
    std::vector<Facet> facets_;
    std::vector<HullFacet> hull_;
    Integer denominator_ = 1;

};

/// Throws HypothesisError("not_full_dimensional" | "not_commode" | "facet_through_origin").
NewtonPolyhedron build_polyhedron(const LaurentPoly& f);

struct CommodeVerdict {
    bool ok = false;
    std::string diagnostic;
};

CommodeVerdict is_commode(const LaurentPoly& f);

struct WeightReport {
    bool bottom = false;  ///< weight of the zero polynomial
    Rational value;
    std::size_t facet = 0;
    Exponent witness;
};

WeightReport phi(const LaurentPoly& g, const NewtonPolyhedron& P);
/// phi(u_1...u_n g); polynomial mode.
WeightReport phi_star(const LaurentPoly& g, const NewtonPolyhedron& P);
Rational phi_monomial(const Exponent& a, const NewtonPolyhedron& P);
Rational phi_star_monomial(const Exponent& a, const NewtonPolyhedron& P);

/// Kouchnirenko number: n! vol (laurent) or the alternating coordinate-section sum (polynomial).
Integer newton_number(const NewtonPolyhedron& P);

struct SubdiagramCheck {
    std::string name;
    bool ok = false;
    Rational lhs;
    Rational rhs;
};

struct SubdiagramVerdict {
    bool ok = false;  ///< the condition required by the pipeline for this mode
    std::vector<SubdiagramCheck> checks;
};

/// laurent: phi(g) < 1. polynomial: phi(g) < 1 and the stronger
/// phi*(g) < 1 - phi(u_i) for every i (reported; required only for the gauge-free claim).
SubdiagramVerdict is_subdiagram(const LaurentPoly& g, const NewtonPolyhedron& P);

enum class Tristate { no, yes, unknown };
std::string to_string(Tristate t);

struct NondegeneracyVerdict {
    Tristate verdict = Tristate::unknown;
    std::size_t faces_checked = 0;
    std::vector<Exponent> failing_face;  ///< vertices of a degenerate (or undecided) face
    std::string diagnostic;
};

NondegeneracyVerdict is_nondegenerate(const LaurentPoly& f, std::size_t budget = 100000);

}  // namespace brieskorn
