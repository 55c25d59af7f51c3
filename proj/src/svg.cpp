#include "buzz/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "buzz/csv.hpp"

namespace buzz {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

constexpr double kSize = 480.0;
constexpr double kMargin = 56.0;

}  // namespace

std::string render_diagram_svg(const ZigzagDiagram& diagram) {
    const int n = std::max(diagram.n_snapshots - 1, 0);
    const double t_max = n + 1;           // end-of-zigzag death
    const double lo = -0.25, hi = t_max + 0.25;
    const double span = kSize - 2.0 * kMargin;
    auto X = [&](double t) { return kMargin + (t - lo) / (hi - lo) * span; };
    auto Y = [&](double t) { return kSize - kMargin - (t - lo) / (hi - lo) * span; };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" "
         "viewBox=\"0 0 480 480\">\n";
    s += "<rect width=\"480\" height=\"480\" fill=\"white\"/>\n";

    // axes
    s += "<line x1=\"" + fmt(X(lo)) + "\" y1=\"" + fmt(Y(lo)) + "\" x2=\"" + fmt(X(hi)) +
         "\" y2=\"" + fmt(Y(lo)) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    s += "<line x1=\"" + fmt(X(lo)) + "\" y1=\"" + fmt(Y(lo)) + "\" x2=\"" + fmt(X(lo)) +
         "\" y2=\"" + fmt(Y(hi)) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // half-integer ticks on both axes
    for (int g = 0; g <= 2 * (n + 1); ++g) {
        const double t = 0.5 * g;
        const bool integer = (g % 2 == 0);
        const double len = integer ? 6.0 : 3.0;
        s += "<line x1=\"" + fmt(X(t)) + "\" y1=\"" + fmt(Y(lo)) + "\" x2=\"" + fmt(X(t)) +
             "\" y2=\"" + fmt(Y(lo) + len) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        s += "<line x1=\"" + fmt(X(lo)) + "\" y1=\"" + fmt(Y(t)) + "\" x2=\"" + fmt(X(lo) - len) +
             "\" y2=\"" + fmt(Y(t)) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        if (integer) {
            s += "<text x=\"" + fmt(X(t)) + "\" y=\"" + fmt(Y(lo) + 18.0) +
                 "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"sans-serif\">" +
                 fmt_tick(t) + "</text>\n";
            s += "<text x=\"" + fmt(X(lo) - 9.0) + "\" y=\"" + fmt(Y(t) + 4.0) +
                 "\" font-size=\"11\" text-anchor=\"end\" font-family=\"sans-serif\">" +
                 fmt_tick(t) + "</text>\n";
        }
    }
    s += "<text x=\"" + fmt(kSize / 2) + "\" y=\"" + fmt(kSize - 12.0) +
         "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"sans-serif\">birth</text>\n";
    s += "<text x=\"14\" y=\"" + fmt(kSize / 2) +
         "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "transform=\"rotate(-90 14 " +
         fmt(kSize / 2) + ")\">death</text>\n";

    // diagonal
    s += "<line x1=\"" + fmt(X(lo)) + "\" y1=\"" + fmt(Y(lo)) + "\" x2=\"" + fmt(X(hi)) +
         "\" y2=\"" + fmt(Y(hi)) + "\" stroke=\"gray\" stroke-width=\"1\" "
         "stroke-dasharray=\"4 3\"/>\n";

    // markers, one style per homology dimension
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
    for (const auto& p : diagram.points) {
        const double cx = X(p.birth), cy = Y(p.death);
        const char* color = kColors[p.dim % 4];
        switch (p.dim % 4) {
            case 0:
                s += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) +
                     "\" r=\"4\" fill=\"" + color + "\"/>\n";
                break;
            case 1:
                s += "<rect x=\"" + fmt(cx - 3.5) + "\" y=\"" + fmt(cy - 3.5) +
                     "\" width=\"7\" height=\"7\" fill=\"" + color + "\"/>\n";
                break;
            case 2:
                s += "<polygon points=\"" + fmt(cx) + "," + fmt(cy - 4.5) + " " + fmt(cx - 4.0) +
                     "," + fmt(cy + 3.5) + " " + fmt(cx + 4.0) + "," + fmt(cy + 3.5) +
                     "\" fill=\"" + color + "\"/>\n";
                break;
            default:
                s += "<polygon points=\"" + fmt(cx) + "," + fmt(cy - 5.0) + " " + fmt(cx + 5.0) +
                     "," + fmt(cy) + " " + fmt(cx) + "," + fmt(cy + 5.0) + " " + fmt(cx - 5.0) +
                     "," + fmt(cy) + "\" fill=\"" + color + "\"/>\n";
                break;
        }
    }
    s += "</svg>\n";
    return s;
}

void render_diagram(const ZigzagDiagram& diagram, const std::string& path) {
    write_text_file(path, render_diagram_svg(diagram));
}

}  // namespace buzz
