#pragma once

#include "subord/error.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace subord {

/// Immutable expression tree for a holomorphic map of one complex variable.
///
/// Nodes are shared between trees (differentiation reuses its input's
/// subtrees), so copies are cheap and instances are safe to share across
/// threads. No simplification is ever applied: the tree built is the tree
/// evaluated.
class AnalyticMap {
public:
    enum class Kind { Constant, Identity, Sum, Difference, Product, Quotient, Power, Log, Exp, Compose };

    /// The zero constant.
    AnalyticMap();

    static AnalyticMap constant(Complex c);
    static AnalyticMap identity();

    Kind kind() const noexcept;
    /// Constant value for Constant nodes, exponent for Power nodes, 0 otherwise.
    Complex value() const noexcept;
    /// First operand (outer map for Compose, base for Power). Undefined for leaves.
    const AnalyticMap& lhs() const;
    /// Second operand (inner map for Compose). Undefined for unary nodes and leaves.
    const AnalyticMap& rhs() const;

    /// Identity of the underlying node; equal for copies of the same tree.
    const void* id() const noexcept;

    /// Evaluates at z; errors carry z as their point. The first call compiles
    /// the tree into a straight-line program that evaluates shared subtrees
    /// once; the program is cached on the node.
    Complex operator()(Complex z) const;

    /// Node count with shared subtrees counted once per reference.
    std::size_t size() const;

    friend AnalyticMap operator+(const AnalyticMap& a, const AnalyticMap& b);
    friend AnalyticMap operator-(const AnalyticMap& a, const AnalyticMap& b);
    friend AnalyticMap operator*(const AnalyticMap& a, const AnalyticMap& b);
    friend AnalyticMap operator/(const AnalyticMap& a, const AnalyticMap& b);
    friend AnalyticMap pow(const AnalyticMap& base, Complex exponent);
    friend AnalyticMap log(const AnalyticMap& m);
    friend AnalyticMap exp(const AnalyticMap& m);
    friend AnalyticMap compose(const AnalyticMap& outer, const AnalyticMap& inner);

private:
    struct Node;
    explicit AnalyticMap(std::shared_ptr<const Node> node);
    static AnalyticMap make(Kind kind, Complex value, const AnalyticMap* a, const AnalyticMap* b);

    std::shared_ptr<const Node> node_;
};

AnalyticMap operator+(const AnalyticMap& a, const AnalyticMap& b);
AnalyticMap operator-(const AnalyticMap& a, const AnalyticMap& b);
AnalyticMap operator*(const AnalyticMap& a, const AnalyticMap& b);
AnalyticMap operator/(const AnalyticMap& a, const AnalyticMap& b);

/// Principal power with a constant exponent.
AnalyticMap pow(const AnalyticMap& base, Complex exponent);
/// Principal logarithm.
AnalyticMap log(const AnalyticMap& m);
AnalyticMap exp(const AnalyticMap& m);
/// outer(inner(z)).
AnalyticMap compose(const AnalyticMap& outer, const AnalyticMap& inner);

AnalyticMap operator+(const AnalyticMap& a, Complex c);
AnalyticMap operator+(Complex c, const AnalyticMap& a);
AnalyticMap operator-(const AnalyticMap& a, Complex c);
AnalyticMap operator-(Complex c, const AnalyticMap& a);
AnalyticMap operator*(const AnalyticMap& a, Complex c);
AnalyticMap operator*(Complex c, const AnalyticMap& a);
AnalyticMap operator/(const AnalyticMap& a, Complex c);
AnalyticMap operator/(Complex c, const AnalyticMap& a);

/// Shorthand for AnalyticMap::identity().
AnalyticMap z_map();
/// Shorthand for AnalyticMap::constant(c).
AnalyticMap constant(Complex c);

Complex eval(const AnalyticMap& m, Complex z);

/// Exact symbolic derivative; errors surface only when the result is evaluated.
AnalyticMap differentiate(const AnalyticMap& m);

/// Prefix serialization, one node per whitespace-separated token:
///
///     z                 identity
///     1.5   0.5,-2      constants (real, or re,im without spaces)
///     + a b   - a b   * a b   / a b
///     pow[c] a          principal power, c a real or re,im literal
///     log a   exp a
///     @ outer inner     composition
///
/// Numbers are printed with 17 significant digits so parse(serialize(m))
/// evaluates bit-identically to m.
std::string serialize(const AnalyticMap& m);
AnalyticMap parse_map(std::string_view text);

} // namespace subord
