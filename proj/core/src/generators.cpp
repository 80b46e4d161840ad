#include "cylcob/generators.hpp"

namespace cylcob {

Generator::Generator(GenKind kind, int arity, int slot) : kind_(kind), arity_(arity), slot_(slot) {
    switch (kind_) {
        case GenKind::id:
        case GenKind::twist:
        case GenKind::twist_inv:
            if (arity_ < 0) throw OutOfRange("generator arity must be non-negative");
            break;
        case GenKind::birth:
            if (arity_ < 0) throw OutOfRange("birth arity must be non-negative");
            if (slot_ < 0 || slot_ > arity_ + 1)
                throw OutOfRange("birth slot " + std::to_string(slot_) + " out of range 0.." +
                                 std::to_string(arity_ + 1));
            break;
        case GenKind::death:
            if (arity_ < 2) throw OutOfRange("death needs at least two marked points");
            if (slot_ < 0 || slot_ > arity_ - 1)
                throw OutOfRange("death slot " + std::to_string(slot_) + " out of range 0.." +
                                 std::to_string(arity_ - 1));
            break;
    }
}

int Generator::target() const {
    switch (kind_) {
        case GenKind::id:
        case GenKind::twist:
        case GenKind::twist_inv:
            return arity_;
        case GenKind::birth:
            return arity_ + 2;
        case GenKind::death:
            return arity_ - 2;
    }
    return arity_;
}

std::string Generator::str() const {
    const std::string k = std::to_string(arity_);
    switch (kind_) {
        case GenKind::id:
            return "id(" + k + ")";
        case GenKind::twist:
            return "tw(" + k + ")";
        case GenKind::twist_inv:
            return "tw'(" + k + ")";
        case GenKind::birth:
            return "b(" + k + "," + std::to_string(slot_) + ")";
        case GenKind::death:
            return "d(" + k + "," + std::to_string(slot_) + ")";
    }
    return {};
}

}  // namespace cylcob
