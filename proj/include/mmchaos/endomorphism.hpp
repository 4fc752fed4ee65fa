#pragma once

#include "mmchaos/point.hpp"
#include "mmchaos/scalar.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace mmchaos {

// A continuous self-map of one ground space. Interval maps are piecewise
// linear (or constant, a special case kept exact); symbol maps are the shift
// and constant maps.
class Endomorphism {
  public:
    virtual ~Endomorphism() = default;

    virtual Space space() const = 0;
    virtual Point apply(const Point& p) const = 0;
    // Canonical descriptor, parseable back into an equal map.
    virtual std::string descriptor() const = 0;
};

using MapPtr = std::shared_ptr<const Endomorphism>;

// Piecewise linear interval map given by breakpoints (x_i, y_i) with
// 0 = x_0 < x_1 < ... < x_k = 1 and y_i in [0, 1]. Exact points are mapped
// with rational arithmetic, binary points in double arithmetic.
class PwlMap final : public Endomorphism {
  public:
    explicit PwlMap(std::vector<std::pair<Rational, Rational>> breakpoints);

    Space space() const override { return Space::Interval; }
    Point apply(const Point& p) const override;
    std::string descriptor() const override;

    Rational apply_exact(const Rational& x) const;
    double apply_binary(double x) const;

    const std::vector<std::pair<Rational, Rational>>& breakpoints() const { return breakpoints_; }

  private:
    std::vector<std::pair<Rational, Rational>> breakpoints_;
    // Mirror of the breakpoints for the double path, precomputed once.
    std::vector<std::pair<double, double>> approx_;
};

// Constant interval map x -> c.
class ConstMap final : public Endomorphism {
  public:
    explicit ConstMap(Rational value);

    Space space() const override { return Space::Interval; }
    Point apply(const Point& p) const override;
    std::string descriptor() const override;

    const Rational& value() const { return value_; }

  private:
    Rational value_;
};

// Shift map on the symbol space: drops the leading symbol.
class ShiftMap final : public Endomorphism {
  public:
    Space space() const override { return Space::Symbol; }
    Point apply(const Point& p) const override;
    std::string descriptor() const override { return "shift"; }
};

// Constant symbol map x -> a for a fixed point a.
class ConstSeqMap final : public Endomorphism {
  public:
    explicit ConstSeqMap(SymbolPoint target);

    Space space() const override { return Space::Symbol; }
    Point apply(const Point& p) const override;
    std::string descriptor() const override;

    const SymbolPoint& target() const { return target_; }

  private:
    SymbolPoint target_;
};

MapPtr make_pwl(std::vector<std::pair<Rational, Rational>> breakpoints);
MapPtr make_const(Rational value);
MapPtr make_shift();
MapPtr make_const_seq(SymbolPoint target);

// The tent map as a pwl map: (0,0), (1/2,1), (1,0).
MapPtr make_tent();
// The identity as a pwl map: (0,0), (1,1).
MapPtr make_identity();

} // namespace mmchaos
