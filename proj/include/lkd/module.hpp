#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "lkd/bidegree.hpp"
#include "lkd/matrix.hpp"

namespace lkd {

struct Generator {
    std::string label;
    BiDegree degree;

    bool odd() const { return degree.i % 2 != 0; }
};

/// The generator data of an acting graded-commutative algebra.
struct AlgebraSignature {
    std::string name;
    std::vector<Generator> gens;
    /// gens x gens; column g holds d(g) in generator coordinates.
    Matrix gen_differential;

    bool same_as(const AlgebraSignature& o) const;
};

using AlgebraPtr = std::shared_ptr<const AlgebraSignature>;

/// The base field as an algebra with no generators.
AlgebraPtr trivial_algebra(const FieldSpec& field);

/// Backing computation of a module. Only called on bidegrees inside the region
/// with nonzero source and target; results are memoized by DgModule.
class ModuleImpl {
public:
    virtual ~ModuleImpl() = default;
    virtual std::size_t dim(BiDegree d) const = 0;
    /// dim(d + (1,0)) x dim(d)
    virtual Matrix differential(BiDegree d) const = 0;
    /// dim(d + deg g) x dim(d)
    virtual Matrix action(std::size_t g, BiDegree d) const = 0;
    virtual std::vector<std::string> part_names() const { return {}; }
    virtual Matrix part(std::size_t k, BiDegree d) const;
};

/// Immutable, lazily evaluated bigraded dg-module. Cheap to copy.
class DgModule {
public:
    DgModule() = default;
    DgModule(FieldSpec field, AlgebraPtr algebra, Region region, std::string name,
             std::shared_ptr<const ModuleImpl> impl);

    bool valid() const { return s_ != nullptr; }
    const FieldSpec& field() const;
    const AlgebraPtr& algebra() const;
    const Region& region() const;
    const std::string& name() const;
    const ModuleImpl& impl() const;
    DgModule renamed(std::string name) const;

    std::size_t dim(BiDegree d) const;
    const Matrix& d(BiDegree x) const;
    const Matrix& action(std::size_t g, BiDegree x) const;
    /// Labeled decomposition of d; empty when none is recorded.
    const std::vector<std::string>& part_names() const;
    const Matrix& part(std::size_t k, BiDegree x) const;

private:
    struct State;
    std::shared_ptr<const State> s_;
};

/// A family of blocks source(x) -> target(x + shift).
class ChainMap {
public:
    using BlockFn = std::function<Matrix(BiDegree)>;

    ChainMap() = default;
    ChainMap(DgModule source, DgModule target, BiDegree shift, std::string name, BlockFn blocks);

    static ChainMap identity(const DgModule& m);
    /// second after first
    static ChainMap compose(const ChainMap& second, const ChainMap& first);

    const DgModule& source() const;
    const DgModule& target() const;
    BiDegree shift() const;
    const std::string& name() const;
    const Matrix& block(BiDegree x) const;

private:
    struct State;
    std::shared_ptr<const State> s_;
};

/// Outcome of an identity check over a window; keeps the first failure.
struct CheckReport {
    bool ok = true;
    std::size_t checks = 0;
    std::string identity;
    BiDegree cell;
    std::string detail;

    void fail(const std::string& what, BiDegree at, const std::string& why = "");
    void merge(const CheckReport& other);
    std::string summary() const;
};

/// d^2 = 0, Leibniz for every generator, graded commutativity of generator actions
/// and vanishing squares of odd generators on every cell of the window.
CheckReport check_dg_axioms(const DgModule& m, const Window& w);

/// target.d * block = (-1)^{shift.i} block * source.d; with `actions`, also
/// block * g = (-1)^{|g| shift.i} g * block for every generator.
CheckReport check_chain_map(const ChainMap& h, const Window& w, bool actions = false);

/// For a module with parts d1..d4: their sum is d, (d1+d2)^2 = 0, (d3+d4)^2 = 0
/// and the graded anticommutator of the two sums vanishes.
CheckReport check_differential_parts(const DgModule& m, const Window& w);

/// Blocks agree on every cell of the window.
CheckReport check_maps_equal(const ChainMap& a, const ChainMap& b, const Window& w);

}  // namespace lkd
