#pragma once

#include <string>
#include <vector>

#include "ninepalace/grid.hpp"

namespace ninepalace {

// One event attached to a step. kind is one of "carry", "borrow", "lap",
// "annotation".
struct TraceEvent {
    std::string kind;
    std::string text;

    bool operator==(const TraceEvent&) const = default;
};

struct CellRef {
    long long family = 0;
    int position = 0; // 0..10

    int row() const { return Position{position}.row(); }
    int col() const { return Position{position}.col(); }

    bool operator==(const CellRef&) const = default;
};

// Canonical arrow between two cells of the digit line. wrap marks a move
// that leaves its row while following the digit order (the long diagonal
// arrow form of the basic diagrams).
struct Arrow {
    int dcol = 0;
    int drow = 0;
    bool wrap = false;

    bool operator==(const Arrow&) const = default;
};

struct TraceStep {
    std::string kind; // "walk", "count", "move", "column", "mark", ...
    CellRef start;
    CellRef end;
    Arrow arrow;
    std::vector<TraceEvent> events;

    bool operator==(const TraceStep&) const = default;
};

struct StepTrace {
    std::vector<TraceStep> steps;

    void append(TraceStep s) { steps.push_back(std::move(s)); }
    void append(const StepTrace& t);
    bool empty() const { return steps.empty(); }
};

// Builds a step whose arrow and carry/borrow events are derived from the
// start and end cells, so that replay() can reconstruct it.
TraceStep make_step(std::string kind, CellRef start, CellRef end);

int family_delta_of(const TraceStep& s);

// Recomputes every step's end cell from its start cell, arrow and
// carry/borrow events. True iff all recorded ends match.
bool replay(const StepTrace& t);

} // namespace ninepalace
