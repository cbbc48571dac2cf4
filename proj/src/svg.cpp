#include "lrc/svg.hpp"

#include <algorithm>
#include <sstream>

namespace lrc {

namespace {

// fixed-point pixel formatting keeps output byte-stable
std::string px(double v) {
    char buf[32];
    snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    return s;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

std::string renderSvg(const LayeredGraph& g, const Representation& r, const SvgOptions& opts) {
    const int L = g.layerCount();
    const double u = opts.unit;

    double minX = 0, maxX = 1;
    bool any = false;
    for (int i = 1; i <= L; i++) {
        for (int j = 1; j <= g.layerSize(i); j++) {
            double lo = r.x({i, j}).toDouble();
            double hi = lo + g.width({i, j});
            if (!any) { minX = lo; maxX = hi; any = true; }
            minX = std::min(minX, lo);
            maxX = std::max(maxX, hi);
        }
    }
    double pad = 0.5;
    double w = (maxX - minX + 2 * pad) * u;
    double h = (L + 2 * pad) * u;
    auto X = [&](double gx) { return (gx - minX + pad) * u; };
    auto Y = [&](int layer) { return (L - layer + pad) * u; };  // top of the row

    ContactReport rep = evaluate(g, r);

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(w) << "\" height=\""
      << px(h) << "\" viewBox=\"0 0 " << px(w) << " " << px(h) << "\">\n";
    s << "<rect width=\"" << px(w) << "\" height=\"" << px(h) << "\" fill=\"white\"/>\n";

    for (int i = 1; i <= L; i++) {
        for (int j = 1; j <= g.layerSize(i); j++) {
            double gx = r.x({i, j}).toDouble();
            int gw = g.width({i, j});
            s << "<rect x=\"" << px(X(gx)) << "\" y=\"" << px(Y(i)) << "\" width=\""
              << px(gw * u) << "\" height=\"" << px(u)
              << "\" fill=\"#dbe7f5\" stroke=\"#35506e\" stroke-width=\"1\"/>\n";
            if (opts.drawLabels && !g.vertex({i, j}).label.empty()) {
                s << "<text x=\"" << px(X(gx) + gw * u / 2) << "\" y=\""
                  << px(Y(i) + u * 0.65) << "\" font-size=\"" << px(u * 0.38)
                  << "\" text-anchor=\"middle\" font-family=\"sans-serif\">"
                  << escape(g.vertex({i, j}).label) << "</text>\n";
            }
        }
    }

    // realized contacts: thick segment on the shared boundary
    for (const Edge& e : rep.realizedEdges) {
        double ax = r.x(e.first).toDouble(), bx = r.x(e.second).toDouble();
        int aw = g.width(e.first), bw = g.width(e.second);
        if (e.first.layer == e.second.layer) {
            double x = X(ax + aw);
            s << "<line x1=\"" << px(x) << "\" y1=\"" << px(Y(e.first.layer)) << "\" x2=\""
              << px(x) << "\" y2=\"" << px(Y(e.first.layer) + u)
              << "\" stroke=\"#1d7a2c\" stroke-width=\"3\"/>\n";
        } else {
            double lo = std::max(ax, bx), hi = std::min(ax + aw, bx + bw);
            double y = Y(e.second.layer) + u;  // boundary between the two rows
            s << "<line x1=\"" << px(X(lo)) << "\" y1=\"" << px(y) << "\" x2=\"" << px(X(hi))
              << "\" y2=\"" << px(y) << "\" stroke=\"#1d7a2c\" stroke-width=\"3\"/>\n";
        }
    }

    for (const ContactPair& fa : rep.falseAdjacencies) {
        double ax = r.x(fa.a).toDouble(), bx = r.x(fa.b).toDouble();
        int aw = g.width(fa.a), bw = g.width(fa.b);
        if (fa.a.layer == fa.b.layer) {
            double x = X(ax + aw);
            s << "<line x1=\"" << px(x) << "\" y1=\"" << px(Y(fa.a.layer)) << "\" x2=\"" << px(x)
              << "\" y2=\"" << px(Y(fa.a.layer) + u)
              << "\" stroke=\"#c1272d\" stroke-width=\"4\" stroke-dasharray=\"4 2\"/>\n";
        } else {
            double lo = std::max(ax, bx), hi = std::min(ax + aw, bx + bw);
            double y = Y(fa.b.layer) + u;
            s << "<line x1=\"" << px(X(lo)) << "\" y1=\"" << px(y) << "\" x2=\"" << px(X(hi))
              << "\" y2=\"" << px(y)
              << "\" stroke=\"#c1272d\" stroke-width=\"4\" stroke-dasharray=\"4 2\"/>\n";
        }
    }

    s << "</svg>\n";
    return s.str();
}

} // namespace lrc
