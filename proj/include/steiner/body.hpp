#pragma once

#include <memory>
#include <vector>

#include "steiner/errors.hpp"
#include "steiner/types.hpp"

namespace steiner {

class QuadratureRule;

/// Unit vector on S^{n-1}. Constructing one asserts |v| = 1 within 1e-12;
/// use normalized() to scale an arbitrary nonzero vector first.
class Direction {
public:
    explicit Direction(Vec v);
    static Direction normalized(Vec v);

    const Vec& vec() const { return v_; }
    int dim() const { return static_cast<int>(v_.size()); }

private:
    Vec v_;
};

/// Orthonormal basis of the tangent space at `base`: `basis` is n x (n-1)
/// with columns orthogonal to the direction. Built from a single Householder
/// reflection, so the frame is a deterministic function of the direction.
struct TangentFrame {
    Direction base;
    Mat basis;
};

TangentFrame tangent_frame(const Direction& w);

/// Eigenvalues of the tangentially restricted support-function Hessian,
/// sorted ascending: the principal radii of curvature of the boundary point
/// with outer normal w. All entries are >= 0 for a valid body up to a
/// -1e-9 numerical allowance; anything below that throws.
struct PrincipalRadii {
    explicit PrincipalRadii(Vec sorted_values);
    const Vec& values() const { return values_; }
    double min() const { return values_(0); }
    double max() const { return values_(values_.size() - 1); }

private:
    Vec values_;
};

enum class BodyKind { Ball, Ellipsoid, Sum, Offset, Complement, Translate };

/// Internal expression node; exposed so serialization can walk the tree.
struct BodyNode {
    BodyKind kind;
    int dim;

    BodyNode(BodyKind k, int d) : kind(k), dim(d) {}
    virtual ~BodyNode() = default;

    // All three are the degree-1 homogeneous extension evaluated at any
    // nonzero x (not just unit vectors); hessian is the full ambient n x n
    // matrix, which annihilates x itself.
    virtual double support(const Vec& x) const = 0;
    virtual Vec gradient(const Vec& x) const = 0;
    virtual Mat hessian(const Vec& x) const = 0;
};

/// Smooth convex body given by its support function, built as an immutable
/// expression tree: balls, origin-centered ellipsoids, Minkowski sums, and
/// ball offsets p + s|x| (outer for s > 0, inner for s < 0) or reflected
/// complements c|x| - p. Copies share nodes.
///
/// Offsets with s < 0 and complements encode Minkowski differences; they are
/// only convex bodies when the corresponding summand condition holds, so
/// those constructors produce a descriptor that refuses evaluation until it
/// has been certified (see minkowski.hpp, which builds certified ones).
class ConvexBody {
public:
    static ConvexBody ball(int dim, double radius);
    static ConvexBody ellipsoid(std::vector<double> semi_axes);
    static ConvexBody sum(std::vector<ConvexBody> parts);
    /// Support p(x) + v.x; translation of the body by v. Used to exercise
    /// translation invariance; not part of the file format.
    static ConvexBody translated(ConvexBody inner, Vec v);

    /// Tag for the certified constructors: the caller has verified the
    /// summand condition that makes the descriptor a genuine convex body.
    struct Certified {};

    static ConvexBody offset(ConvexBody inner, double shift);
    static ConvexBody offset(ConvexBody inner, double shift, Certified);
    static ConvexBody complement(ConvexBody inner, double c);
    static ConvexBody complement(ConvexBody inner, double c, Certified);

    int dimension() const { return node_->dim; }

    /// Support function (degree-1 homogeneous), its gradient (the boundary
    /// point with outer normal x/|x|), and its ambient Hessian at any
    /// nonzero x. Throws PreconditionError if the tree contains an
    /// uncertified inner offset or complement.
    double support(const Vec& x) const;
    Vec support_gradient(const Vec& x) const;
    Mat hessian(const Vec& x) const;

    /// Hessian restricted to the tangent space at w: B^T H(w) B with B the
    /// deterministic tangent frame. Symmetric (n-1) x (n-1).
    Mat restricted_hessian(const Direction& w) const;

    PrincipalRadii principal_radii(const Direction& w) const;

    const BodyNode& node() const { return *node_; }
    std::shared_ptr<const BodyNode> share() const { return node_; }

    explicit ConvexBody(std::shared_ptr<const BodyNode> node) : node_(std::move(node)) {}

private:
    std::shared_ptr<const BodyNode> node_;
};

/// Global extrema of the principal radii over all directions, located by
/// scanning the rule's nodes plus 10x as many seeded random directions and
/// polishing both candidates with Nelder-Mead in a tangent chart until the
/// direction moves less than refine_tol. Deterministic.
struct RadiiExtrema {
    double rho_min;
    double rho_max;
    Vec argmin;
    Vec argmax;
    long directions_scanned;
};

RadiiExtrema radii_extrema(const ConvexBody& body, const QuadratureRule& rule,
                           double refine_tol = 1e-7);

} // namespace steiner
