#include "ninepalace/trace.hpp"

namespace ninepalace {

void StepTrace::append(const StepTrace& t) {
    steps.insert(steps.end(), t.steps.begin(), t.steps.end());
}

TraceStep make_step(std::string kind, CellRef start, CellRef end) {
    TraceStep s;
    s.kind = std::move(kind);
    s.start = start;
    s.end = end;
    s.arrow.dcol = end.col() - start.col();
    s.arrow.drow = end.row() - start.row();
    s.arrow.wrap = s.arrow.dcol != 0 && s.arrow.drow != 0;
    long long fd = end.family - start.family;
    while (fd > 0) {
        s.events.push_back({"carry", "+1"});
        --fd;
    }
    while (fd < 0) {
        s.events.push_back({"borrow", "-1"});
        ++fd;
    }
    return s;
}

int family_delta_of(const TraceStep& s) {
    int fd = 0;
    for (const TraceEvent& e : s.events) {
        if (e.kind == "carry") ++fd;
        if (e.kind == "borrow") --fd;
    }
    return fd;
}

bool replay(const StepTrace& t) {
    for (const TraceStep& s : t.steps) {
        int row = s.start.row() + s.arrow.drow;
        int col = s.start.col() + s.arrow.dcol;
        Position end_pos{};
        try {
            end_pos = Position::from_row_col(row, col);
        } catch (const std::exception&) {
            return false;
        }
        long long end_family = s.start.family + family_delta_of(s);
        if (end_pos.index != s.end.position || end_family != s.end.family) return false;
    }
    return true;
}

} // namespace ninepalace
