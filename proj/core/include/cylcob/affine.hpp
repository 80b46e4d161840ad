#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "cylcob/word.hpp"

namespace cylcob {

enum class Row : std::uint8_t { bottom, top };

// One end of a strand, seen from a representative marked point: this end
// connects to lift `index + shift * period(row)` of `row`. Equivariance under
// the deck shift (bottom += p, top += q simultaneously) extends the record to
// every lift of the point.
struct Partner {
    Row row;
    int index;
    long long shift;
    auto operator<=>(const Partner&) const = default;
};

// A period-equivariant non-crossing matching on two integer rows: the
// universal-cover picture of a striped cylinder. `bottom` has period p = n_in,
// `top` has period q = n_out. Closed loops carry no geometry, only counts:
// `bracelets` winds around the cylinder, `loops` is the contractible count.
class AffineDiagram {
public:
    AffineDiagram(int bottom_period, int top_period)
        : bottom_period_(bottom_period),
          top_period_(top_period),
          bottom_(static_cast<std::size_t>(bottom_period), Partner{Row::bottom, -1, 0}),
          top_(static_cast<std::size_t>(top_period), Partner{Row::bottom, -1, 0}) {}

    int bottom_period() const { return bottom_period_; }
    int top_period() const { return top_period_; }
    const Partner& bottom(int i) const { return bottom_[static_cast<std::size_t>(i)]; }
    const Partner& top(int i) const { return top_[static_cast<std::size_t>(i)]; }
    long long bracelets() const { return bracelets_; }
    long long loops() const { return loops_; }

    int period(Row row) const { return row == Row::bottom ? bottom_period_ : top_period_; }
    const Partner& partner(Row row, int i) const {
        return row == Row::bottom ? bottom_[static_cast<std::size_t>(i)]
                                  : top_[static_cast<std::size_t>(i)];
    }

    // Partner of an arbitrary lift, by equivariance.
    std::pair<Row, long long> partner_of_lift(Row row, long long lift) const;

    // Records a strand between lift `i1` of `row1` and lift `i2 + shift * period(row2)`
    // of `row2`, filling both table entries.
    void set_pair(Row row1, int i1, Row row2, int i2, long long shift);

    void add_bracelets(long long n) { bracelets_ += n; }
    void add_loops(long long n) { loops_ += n; }

    // Same matching, different loop count; used to fold loops out of map keys.
    AffineDiagram with_loops(long long mu) const {
        AffineDiagram d = *this;
        d.loops_ = mu;
        return d;
    }

    // Checks every structural invariant: full tables, involution, no fixed
    // ends, same-row spans shorter than the period, boundary parity,
    // non-negative counters, and planarity of the lifted matching.
    // Throws Error with a description on the first violation.
    void validate() const;

    bool operator==(const AffineDiagram&) const = default;
    auto operator<=>(const AffineDiagram&) const = default;

private:
    int bottom_period_;
    int top_period_;
    std::vector<Partner> bottom_;
    std::vector<Partner> top_;
    long long bracelets_ = 0;
    long long loops_ = 0;
};

// The affine diagram of a single elementary cobordism (loop counters zero).
AffineDiagram generator_diagram(const Generator& g);

// Stacks `first` under `second`, traces strands through the glued row, and
// counts the closed loops that form: winding 0 is contractible, winding +-1 a
// bracelet. Anything else throws WindingViolation (an internal bug, since
// embedded circles cannot wind twice).
AffineDiagram compose_diagrams(const AffineDiagram& first, const AffineDiagram& second);

// Left fold of compose_diagrams over the generator images; validates the result.
AffineDiagram evaluate(const GeneratorWord& w);

}  // namespace cylcob
