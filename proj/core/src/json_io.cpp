#include "cylcob/json_io.hpp"

#include <algorithm>

namespace cylcob {

namespace {

std::string int_list(const std::vector<int>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out + "]";
}

std::string pair_list(const std::vector<std::pair<int, int>>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += "[" + std::to_string(xs[i].first) + "," + std::to_string(xs[i].second) + "]";
    }
    return out + "]";
}

}  // namespace

std::string invariant_json(const AffineDiagram& d) {
    const InvariantTuple t = invariants(d);
    auto cap_pairs = caps(d);
    auto cup_pairs = cups(d);
    std::sort(cap_pairs.begin(), cap_pairs.end());
    std::sort(cup_pairs.begin(), cup_pairs.end());

    std::string out = "{";
    out += "\"n_in\":" + std::to_string(t.n_in);
    out += ",\"n_out\":" + std::to_string(t.n_out);
    out += ",\"tau\":" + std::to_string(t.through_count);
    out += ",\"t0\":" + (t.twist_class ? std::to_string(*t.twist_class) : std::string("null"));
    out += ",\"beta\":" + std::to_string(t.bracelets);
    out += ",\"mu\":" + std::to_string(t.loops);
    out += ",\"ind_d\":" + int_list(t.death_index);
    out += ",\"ind_b\":" + int_list(t.birth_index);
    out += ",\"caps\":" + pair_list(cap_pairs);
    out += ",\"cups\":" + pair_list(cup_pairs);
    out += ",\"through\":" + pair_list(through_pairs(d));
    return out + "}";
}

std::string matrix_json(const Matrix& m) {
    std::string out = "[";
    for (int r = 0; r < m.rows(); ++r) {
        if (r) out += ",";
        out += "[";
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out += ",";
            out += "\"" + rational_str(m.at(r, c)) + "\"";
        }
        out += "]";
    }
    return out + "]";
}

std::string matrix_csv(const Matrix& m) {
    std::string out;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out += ",";
            out += rational_str(m.at(r, c));
        }
        out += "\n";
    }
    return out;
}

}  // namespace cylcob
