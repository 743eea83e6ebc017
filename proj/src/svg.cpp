#include "snakefrac/svg.hpp"

#include <algorithm>
#include <sstream>

namespace snakefrac {

namespace {

constexpr int kTile = 40;
constexpr int kPad = 20;

struct Panel {
    const SnakeShape& shape;
    const LabeledSnakeGraph* labels;  // may be null
    int max_y;

    int px(int x) const { return kPad + x * kTile; }
    int py(int y) const { return kPad + (max_y + 1 - y) * kTile; }

    void edge_line(std::ostringstream& out, const EdgeId& e, bool thick, int ox) const {
        auto pts = edge_endpoints(shape, e);
        out << "<line x1=\"" << ox + px(pts[0].first) << "\" y1=\"" << py(pts[0].second)
            << "\" x2=\"" << ox + px(pts[1].first) << "\" y2=\"" << py(pts[1].second) << "\"";
        if (thick)
            out << " stroke=\"#b00020\" stroke-width=\"5\" stroke-linecap=\"round\"";
        else
            out << " stroke=\"#202020\" stroke-width=\"1\"";
        out << "/>\n";
    }

    void text(std::ostringstream& out, int x, int y, const std::string& s, int size, int ox) const {
        out << "<text x=\"" << ox + x << "\" y=\"" << y << "\" font-family=\"monospace\" font-size=\""
            << size << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << s
            << "</text>\n";
    }

    void draw(std::ostringstream& out, const PerfectMatching* marked, int ox) const {
        auto edges = all_edges(shape);
        for (const auto& e : edges) edge_line(out, e, false, ox);
        if (marked)
            for (const auto& e : *marked) edge_line(out, e, true, ox);
        if (shape.d > 0) {
            auto pos = tile_positions(shape);
            for (int t = 1; t <= shape.d; ++t) {
                auto [x, y] = pos[static_cast<size_t>(t - 1)];
                std::string lab = labels ? labels->label(t) : std::to_string(t);
                text(out, px(x) + kTile / 2, py(y) - kTile / 2, lab, 12, ox);
            }
        }
        if (labels) {
            for (const auto& e : edges) {
                auto pts = edge_endpoints(shape, e);
                int mx = (px(pts[0].first) + px(pts[1].first)) / 2;
                int my = (py(pts[0].second) + py(pts[1].second)) / 2;
                text(out, mx + (pts[0].first == pts[1].first ? 9 : 0),
                     my + (pts[0].second == pts[1].second ? -7 : 0), labels->weight(e), 9, ox);
            }
        }
    }
};

std::string render(const SnakeShape& s, const LabeledSnakeGraph* labels, bool with_matchings) {
    if (s.d > kRenderGuard) throw Error("render guard exceeded");
    int max_x = 0, max_y = 0;
    for (auto [x, y] : tile_positions(s)) {
        max_x = std::max(max_x, x);
        max_y = std::max(max_y, y);
    }
    Panel panel{s, labels, max_y};
    int pw = (max_x + 1) * kTile + 2 * kPad;
    int ph = (max_y + 1) * kTile + 2 * kPad;
    std::vector<PerfectMatching> ms;
    if (with_matchings) ms = enumerate_matchings(s);
    int count = with_matchings ? static_cast<int>(ms.size()) : 1;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pw * count << "\" height=\""
        << ph << "\" viewBox=\"0 0 " << pw * count << " " << ph << "\">\n";
    if (with_matchings) {
        for (int k = 0; k < count; ++k) panel.draw(out, &ms[static_cast<size_t>(k)], k * pw);
    } else {
        panel.draw(out, nullptr, 0);
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render_shape_svg(const SnakeShape& s, bool with_matchings) {
    return render(s, nullptr, with_matchings);
}

std::string render_labeled_svg(const LabeledSnakeGraph& g, bool with_matchings) {
    return render(g.shape, &g, with_matchings);
}

}  // namespace snakefrac
