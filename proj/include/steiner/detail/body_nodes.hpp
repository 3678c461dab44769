#pragma once

#include <cmath>
#include <memory>
#include <vector>

#include "steiner/body.hpp"

namespace steiner::detail {

// Concrete support-function expression nodes. Implementation detail shared
// by the body module and (for serialization) the io module; everything else
// should stay behind the ConvexBody interface.

// r |x|: gradient r x/|x|, Hessian (r/|x|) (I - xx^T/|x|^2).
struct BallNode final : BodyNode {
    double radius;

    BallNode(int d, double r) : BodyNode(BodyKind::Ball, d), radius(r) {}

    double support(const Vec& x) const override { return radius * x.norm(); }
    Vec gradient(const Vec& x) const override { return radius / x.norm() * x; }
    Mat hessian(const Vec& x) const override {
        const double nx = x.norm();
        const Vec u = x / nx;
        Mat h = Mat::Identity(dim, dim);
        h -= u * u.transpose();
        h *= radius / nx;
        return h;
    }
};

// sqrt(x^T A^2 x) with A = diag(semi-axes): gradient A^2 x / p, Hessian
// A^2/p - (A^2 x)(A^2 x)^T / p^3.
struct EllipsoidNode final : BodyNode {
    std::vector<double> axes; // kept verbatim so serialization round-trips
    Vec axes_sq;

    explicit EllipsoidNode(std::vector<double> semi_axes)
        : BodyNode(BodyKind::Ellipsoid, static_cast<int>(semi_axes.size())),
          axes(std::move(semi_axes)) {
        axes_sq.resize(dim);
        for (int i = 0; i < dim; ++i)
            axes_sq(i) = axes[static_cast<std::size_t>(i)] * axes[static_cast<std::size_t>(i)];
    }

    double support(const Vec& x) const override {
        return std::sqrt(x.dot(Vec(axes_sq.cwiseProduct(x))));
    }
    Vec gradient(const Vec& x) const override { return axes_sq.cwiseProduct(x) / support(x); }
    Mat hessian(const Vec& x) const override {
        const double p = support(x);
        const Vec q = axes_sq.cwiseProduct(x);
        Mat h = Mat(axes_sq.asDiagonal());
        h /= p;
        h -= (q * q.transpose()) / (p * p * p);
        return h;
    }
};

struct SumNode final : BodyNode {
    std::vector<std::shared_ptr<const BodyNode>> parts;

    SumNode(int d, std::vector<std::shared_ptr<const BodyNode>> p)
        : BodyNode(BodyKind::Sum, d), parts(std::move(p)) {}

    double support(const Vec& x) const override {
        double s = 0.0;
        for (const auto& p : parts) s += p->support(x);
        return s;
    }
    Vec gradient(const Vec& x) const override {
        Vec g = Vec::Zero(dim);
        for (const auto& p : parts) g += p->gradient(x);
        return g;
    }
    Mat hessian(const Vec& x) const override {
        Mat h = Mat::Zero(dim, dim);
        for (const auto& p : parts) h += p->hessian(x);
        return h;
    }
};

// p(x) + shift |x|. shift < 0 is an inner parallel body and is only a
// support function when the summand condition holds, hence `certified`.
struct OffsetNode final : BodyNode {
    std::shared_ptr<const BodyNode> inner;
    double shift;
    bool certified;

    OffsetNode(std::shared_ptr<const BodyNode> in, double s, bool cert)
        : BodyNode(BodyKind::Offset, in->dim), inner(std::move(in)), shift(s), certified(cert) {}

    void require_certified() const {
        if (!certified)
            throw PreconditionError(
                "inner parallel body used without a certified summand condition");
    }
    double support(const Vec& x) const override {
        require_certified();
        return inner->support(x) + shift * x.norm();
    }
    Vec gradient(const Vec& x) const override {
        require_certified();
        return Vec(inner->gradient(x) + (shift / x.norm()) * x);
    }
    Mat hessian(const Vec& x) const override {
        require_certified();
        const double nx = x.norm();
        const Vec u = x / nx;
        Mat ball = Mat::Identity(dim, dim);
        ball -= u * u.transpose();
        Mat h = inner->hessian(x);
        h += (shift / nx) * ball;
        return h;
    }
};

// c |x| - p(x): the reflected Minkowski difference cB ~ K. Needs the
// complementary summand condition, hence `certified`.
struct ComplementNode final : BodyNode {
    std::shared_ptr<const BodyNode> inner;
    double c;
    bool certified;

    ComplementNode(std::shared_ptr<const BodyNode> in, double cc, bool cert)
        : BodyNode(BodyKind::Complement, in->dim), inner(std::move(in)), c(cc), certified(cert) {}

    void require_certified() const {
        if (!certified)
            throw PreconditionError(
                "ball complement used without a certified summand condition");
    }
    double support(const Vec& x) const override {
        require_certified();
        return c * x.norm() - inner->support(x);
    }
    Vec gradient(const Vec& x) const override {
        require_certified();
        return Vec((c / x.norm()) * x - inner->gradient(x));
    }
    Mat hessian(const Vec& x) const override {
        require_certified();
        const double nx = x.norm();
        const Vec u = x / nx;
        Mat ball = Mat::Identity(dim, dim);
        ball -= u * u.transpose();
        Mat h = (c / nx) * ball;
        h -= inner->hessian(x);
        return h;
    }
};

// p(x) + v.x: the body translated by v. The Hessian is untouched, so the
// curvature route through any integral sees the exact same numbers.
struct TranslateNode final : BodyNode {
    std::shared_ptr<const BodyNode> inner;
    Vec v;

    TranslateNode(std::shared_ptr<const BodyNode> in, Vec vv)
        : BodyNode(BodyKind::Translate, in->dim), inner(std::move(in)), v(std::move(vv)) {}

    double support(const Vec& x) const override { return inner->support(x) + v.dot(x); }
    Vec gradient(const Vec& x) const override { return Vec(inner->gradient(x) + v); }
    Mat hessian(const Vec& x) const override { return inner->hessian(x); }
};

} // namespace steiner::detail
