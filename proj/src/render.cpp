#include "ninepalace/render.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace ninepalace {

namespace {

int sgn(int v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

bool is_chained_move(const TraceStep& s, const TraceStep* prev) {
    return prev != nullptr && s.start == prev->end && !(s.start == s.end);
}

} // namespace

std::string arrow_glyph(const Arrow& a) {
    static const char* glyphs[3][3] = {
        {"↖", "↑", "↗"},
        {"←", "·", "→"},
        {"↙", "↓", "↘"},
    };
    std::string g = glyphs[sgn(a.drow) + 1][sgn(a.dcol) + 1];
    if (a.wrap) g += "~";
    return g;
}

std::vector<std::vector<const TraceStep*>> split_panels(const StepTrace& trace) {
    std::vector<std::vector<const TraceStep*>> panels;
    std::set<int> used; // positions, families ignored
    const TraceStep* prev = nullptr;
    for (const TraceStep& s : trace.steps) {
        bool fresh = panels.empty() || panels.back().empty();
        bool kind_change = !fresh && panels.back().back()->kind != s.kind;
        // Walk panels break when an arrow would land on a point already
        // drawn; counting panels keep doubled points in one picture.
        bool revisit = !fresh && s.kind == "walk" && is_chained_move(s, prev) &&
                       used.count(s.end.position) > 0;
        if (fresh || kind_change || revisit) {
            panels.emplace_back();
            used.clear();
            used.insert(s.start.position);
        }
        panels.back().push_back(&s);
        used.insert(s.end.position);
        prev = &s;
    }
    return panels;
}

namespace {

std::string ascii_grid(const std::set<int>& visited) {
    auto cell = [&](int pos) {
        std::string digit = std::to_string(pos);
        if (visited.count(pos)) return "[" + digit + "]";
        return " " + digit + (pos == 10 ? "" : " ");
    };
    std::ostringstream os;
    os << cell(0) << " " << cell(1) << " " << cell(2) << " " << cell(3) << "\n";
    os << "    " << cell(4) << " " << cell(5) << " " << cell(6) << "\n";
    os << "    " << cell(7) << " " << cell(8) << " " << cell(9) << " " << cell(10) << "\n";
    return os.str();
}

std::string render_ascii(const StepTrace& trace, const RenderSpec& spec) {
    std::ostringstream os;
    if (spec.refinement > 1) os << "refinement n=" << spec.refinement << "\n";
    auto panels = split_panels(trace);
    if (panels.empty()) {
        os << ascii_grid({});
        return os.str();
    }
    for (std::size_t p = 0; p < panels.size(); ++p) {
        const auto& steps = panels[p];
        os << "panel " << (p + 1) << " (" << steps.front()->kind << ")\n";
        std::set<int> visited;
        visited.insert(steps.front()->start.position);
        for (const TraceStep* s : steps) visited.insert(s->end.position);
        os << ascii_grid(visited);
        for (const TraceStep* s : steps) {
            os << "  " << s->start.position << " " << arrow_glyph(s->arrow) << " "
               << s->end.position;
            if (spec.show_families) os << " (family " << s->end.family << ")";
            for (const TraceEvent& e : s->events) {
                if (e.kind == "annotation")
                    os << "  " << e.text;
                else
                    os << "  [" << e.kind << (e.text.empty() ? "" : " " + e.text) << "]";
            }
            os << "\n";
        }
    }
    return os.str();
}

// Point coordinates in panel-local SVG units.
constexpr int kCell = 40;
constexpr int kMargin = 50;
constexpr int kPanelW = 5 * kCell + 2 * kMargin - kCell; // cols -1..3
constexpr int kPanelH = 2 * kCell + 2 * kMargin;

int svg_x(int panel, int col) { return panel * kPanelW + kMargin + (col + 1) * kCell; }
int svg_y(int row) { return kMargin + row * kCell; }

void svg_point_coords(int panel, int position, int& x, int& y) {
    CellRef c{0, position};
    x = svg_x(panel, c.col());
    y = svg_y(c.row());
}

std::string render_svg(const StepTrace& trace, const RenderSpec& spec) {
    auto panels = split_panels(trace);
    const int count = panels.empty() ? 1 : static_cast<int>(panels.size());
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << count * kPanelW << " "
       << kPanelH << "\">\n";
    os << "<defs><marker id=\"tip\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" "
          "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\"/></marker></defs>\n";
    for (int p = 0; p < count; ++p) {
        // Grid skeleton: the nine points joined by lines, with the two
        // extension stubs.
        for (int r = 0; r < 3; ++r)
            os << "<line x1=\"" << svg_x(p, 0) << "\" y1=\"" << svg_y(r) << "\" x2=\""
               << svg_x(p, 2) << "\" y2=\"" << svg_y(r)
               << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        for (int c = 0; c < 3; ++c)
            os << "<line x1=\"" << svg_x(p, c) << "\" y1=\"" << svg_y(0) << "\" x2=\""
               << svg_x(p, c) << "\" y2=\"" << svg_y(2)
               << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        if (spec.refinement > 1) {
            const int n = spec.refinement;
            for (int r = 0; r <= 2 * n; ++r) {
                int y = svg_y(0) + r * kCell / n;
                os << "<line x1=\"" << svg_x(p, 0) << "\" y1=\"" << y << "\" x2=\"" << svg_x(p, 2)
                   << "\" y2=\"" << y << "\" stroke=\"gray\" stroke-width=\"0.3\"/>\n";
            }
            for (int c = 0; c <= 2 * n; ++c) {
                int x = svg_x(p, 0) + c * kCell / n;
                os << "<line x1=\"" << x << "\" y1=\"" << svg_y(0) << "\" x2=\"" << x
                   << "\" y2=\"" << svg_y(2) << "\" stroke=\"gray\" stroke-width=\"0.3\"/>\n";
            }
        }
        os << "<line x1=\"" << svg_x(p, -1) << "\" y1=\"" << svg_y(0) << "\" x2=\"" << svg_x(p, 0)
           << "\" y2=\"" << svg_y(0) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        os << "<line x1=\"" << svg_x(p, 2) << "\" y1=\"" << svg_y(2) << "\" x2=\"" << svg_x(p, 3)
           << "\" y2=\"" << svg_y(2) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        for (int pos = 0; pos <= 10; ++pos) {
            int x, y;
            svg_point_coords(p, pos, x, y);
            os << "<text x=\"" << x - 12 << "\" y=\"" << y - 8 << "\" font-size=\"10\">" << pos
               << "</text>\n";
        }
    }
    for (std::size_t p = 0; p < panels.size(); ++p) {
        for (const TraceStep* s : panels[p]) {
            int x1, y1, x2, y2;
            svg_point_coords(static_cast<int>(p), s->start.position, x1, y1);
            svg_point_coords(static_cast<int>(p), s->end.position, x2, y2);
            os << "<circle cx=\"" << x1 << "\" cy=\"" << y1 << "\" r=\"4\"/>\n";
            os << "<circle cx=\"" << x2 << "\" cy=\"" << y2 << "\" r=\"4\"/>\n";
            if (!(s->start == s->end))
                os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\""
                   << y2 << "\" stroke=\"black\" stroke-width=\"2\" marker-end=\"url(#tip)\"/>\n";
            if (spec.show_families)
                os << "<text x=\"" << x2 + 6 << "\" y=\"" << y2 + 14 << "\" font-size=\"9\">"
                   << s->end.family << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace

std::string render(const StepTrace& trace, const RenderSpec& spec) {
    if (spec.refinement < 1) throw std::invalid_argument("render: refinement must be >= 1");
    if (spec.format == RenderFormat::Svg) return render_svg(trace, spec);
    return render_ascii(trace, spec);
}

} // namespace ninepalace
