#include "cylcob/render.hpp"

#include <cmath>
#include <string>

namespace cylcob {

namespace {

constexpr double kSize = 480.0;
constexpr double kCx = kSize / 2;
constexpr double kCy = kSize / 2;
constexpr double kOuter = 180.0;
constexpr double kInner = 70.0;

struct Pt {
    double x, y;
};

// Marked point i of k, clockwise from 12 o'clock (screen y grows downward).
Pt point_on(double radius, int i, int k) {
    const double theta = -M_PI / 2 + 2 * M_PI * i / std::max(k, 1);
    return {kCx + radius * std::cos(theta), kCy + radius * std::sin(theta)};
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

void strand_path(std::ostream& out, Pt a, Pt ca, Pt cb, Pt b) {
    out << "  <path class=\"strand\" d=\"M " << num(a.x) << " " << num(a.y) << " C " << num(ca.x)
        << " " << num(ca.y) << ", " << num(cb.x) << " " << num(cb.y) << ", " << num(b.x) << " "
        << num(b.y) << "\" fill=\"none\" stroke=\"#1d3557\" stroke-width=\"2\"/>\n";
}

Pt toward_center(Pt p, double f) { return {kCx + (p.x - kCx) * f, kCy + (p.y - kCy) * f}; }

Pt midpoint(Pt a, Pt b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

}  // namespace

void render_svg(std::ostream& out, const AffineDiagram& d) {
    const int n_in = d.bottom_period();
    const int n_out = d.top_period();
    const InvariantTuple inv = invariants(d);

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
        << kSize + 90 << "\" viewBox=\"0 0 " << kSize << " " << kSize + 90 << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "  <circle cx=\"" << kCx << "\" cy=\"" << kCy << "\" r=\"" << kOuter
        << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
    out << "  <circle cx=\"" << kCx << "\" cy=\"" << kCy << "\" r=\"" << kInner
        << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";

    // caps: arcs hugging the outer circle
    for (const auto& [s, e] : caps(d)) {
        const Pt a = point_on(kOuter, s, n_in);
        const Pt b = point_on(kOuter, e, n_in);
        const Pt c = toward_center(midpoint(a, b), 0.72);
        strand_path(out, a, c, c, b);
    }
    // cups: arcs bulging out of the inner circle
    for (const auto& [s, e] : cups(d)) {
        const Pt a = point_on(kInner, s, n_out);
        const Pt b = point_on(kInner, e, n_out);
        const Pt c = toward_center(midpoint(a, b), 1.9);
        strand_path(out, a, c, c, b);
    }
    // through strands
    for (const auto& [i, o] : through_pairs(d)) {
        const Pt a = point_on(kOuter, i, n_in);
        const Pt b = point_on(kInner, o, n_out);
        strand_path(out, a, toward_center(a, 0.75), toward_center(b, 1.35), b);
    }
    // bracelets: concentric loops between the boundaries
    for (long long bi = 0; bi < d.bracelets(); ++bi) {
        const double r = kInner + (kOuter - kInner) * (bi + 1.0) / (d.bracelets() + 1.0);
        out << "  <circle class=\"strand bracelet\" cx=\"" << kCx << "\" cy=\"" << kCy << "\" r=\""
            << num(r) << "\" fill=\"none\" stroke=\"#e63946\" stroke-width=\"2\"/>\n";
    }

    // marked points and labels, basepoint filled
    for (int i = 0; i < n_in; ++i) {
        const Pt p = point_on(kOuter, i, n_in);
        const Pt lp = toward_center(p, 1.09);
        out << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"4\" fill=\""
            << (i == 0 ? "#e63946" : "white") << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << num(lp.x) << "\" y=\"" << num(lp.y)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << i << "</text>\n";
    }
    for (int i = 0; i < n_out; ++i) {
        const Pt p = point_on(kInner, i, n_out);
        const Pt lp = toward_center(p, 0.78);
        out << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"4\" fill=\""
            << (i == 0 ? "#e63946" : "white") << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << num(lp.x) << "\" y=\"" << num(lp.y)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << i << "</text>\n";
    }

    // legend
    std::string ind_d = "[", ind_b = "[";
    for (std::size_t i = 0; i < inv.death_index.size(); ++i)
        ind_d += (i ? "," : "") + std::to_string(inv.death_index[i]);
    for (std::size_t i = 0; i < inv.birth_index.size(); ++i)
        ind_b += (i ? "," : "") + std::to_string(inv.birth_index[i]);
    ind_d += "]";
    ind_b += "]";
    out << "  <text x=\"16\" y=\"" << kSize + 24 << "\" font-size=\"14\">ingoing " << n_in
        << ", outgoing " << n_out << ", tau " << inv.through_count << ", t0 "
        << (inv.twist_class ? std::to_string(*inv.twist_class) : "-") << "</text>\n";
    out << "  <text x=\"16\" y=\"" << kSize + 46 << "\" font-size=\"14\">ind_d " << ind_d
        << ", ind_b " << ind_b << "</text>\n";
    out << "  <text x=\"16\" y=\"" << kSize + 68 << "\" font-size=\"14\">bracelets "
        << inv.bracelets << ", loops " << inv.loops << "</text>\n";
    out << "</svg>\n";
}

}  // namespace cylcob
