#pragma once

#include <compare>
#include <string>

#include "cylcob/errors.hpp"

namespace cylcob {

// The five elementary striped-cylinder cobordisms. Marked points on a k-marked
// circle are labeled 0..k-1 clockwise with basepoint 0; all slots are absolute
// labels on the source or target circle.
//
//   id(k)      identity cylinder on k points
//   tw(k)      clockwise twist, point i -> point i+1 (mod k)
//   tw'(k)     inverse twist; legal as a generator only at the affine-diagram
//              level, rewritten to tw(k)^{k-1} before cylinder-level equality
//   b(k,i)     birth, k -> k+2 points, cup from point i to i+1 (mod k+2), 0 <= i <= k+1
//   d(k,i)     death, k -> k-2 points, cap from point i to i+1 (mod k),  0 <= i <= k-1
enum class GenKind { id, twist, twist_inv, birth, death };

class Generator {
public:
    static Generator id(int arity) { return Generator(GenKind::id, arity, 0); }
    static Generator twist(int arity) { return Generator(GenKind::twist, arity, 0); }
    static Generator twist_inv(int arity) { return Generator(GenKind::twist_inv, arity, 0); }
    static Generator birth(int arity, int slot) { return Generator(GenKind::birth, arity, slot); }
    static Generator death(int arity, int slot) { return Generator(GenKind::death, arity, slot); }

    GenKind kind() const { return kind_; }
    int arity() const { return arity_; }
    int slot() const { return slot_; }

    int source() const { return arity_; }
    int target() const;

    bool is_endomorphism() const { return source() == target(); }

    std::string str() const;

    auto operator<=>(const Generator&) const = default;

private:
    Generator(GenKind kind, int arity, int slot);

    GenKind kind_;
    int arity_;
    int slot_;
};

// (source, target) arities of a generator.
struct Signature {
    int source;
    int target;
    bool operator==(const Signature&) const = default;
};

inline Signature generator_signature(const Generator& g) { return {g.source(), g.target()}; }

// The object S^1_k: a circle with k marked points, basepoint 0, oriented clockwise.
struct ObjectLabel {
    int points;

    explicit ObjectLabel(int k) : points(k) {
        if (k < 0) throw OutOfRange("a marked circle needs a non-negative point count");
    }
    std::string str() const { return "S1_" + std::to_string(points); }
    auto operator<=>(const ObjectLabel&) const = default;
};

}  // namespace cylcob
