#pragma once

#include "momdp/engine.hpp"
#include "momdp/mdp.hpp"

#include <array>
#include <string>
#include <vector>

namespace momdp {

/// Rendering knobs for the TikZ emitter. Projection unit vectors default to
/// the reference 3D projection; axis ends are max coordinate + (overshoot - 1).
struct TikzStyle {
    double fill_opacity = 0.3; // in [0,1]
    std::string fill_color = "gray!40";
    std::string arrow_tip = "-latex'";
    double tick_step = 0.5; // > 0
    double axis_overshoot = 1.12;
    double scale = 0.3;
    std::array<std::array<double, 2>, 3> projection = {
        {{-4.499513, -1.834018}, {0.0, 6.577848}, {2.304853, -0.661467}}};
};

struct AxisInfo {
    std::string name;
    double sign = 1.0;
    double offset = 0.0;
};

/// An approximation plus the per-axis metadata needed for user-facing output.
struct ExportBundle {
    ParetoApproximation approximation;
    std::vector<AxisInfo> axes; // size k
};

ExportBundle make_bundle(const ParetoApproximation& approx,
                         const NormalizedObjectives& norm);

/// Bundle over raw points with identity axes; for exporting externally
/// computed point sets.
ExportBundle bundle_from_points(std::vector<Point> points,
                                std::vector<std::string> axis_names);

/// TikZ picture of the under-approximation: axis arrows, ticks, one fill path
/// per facet triangle (k=3) or a single filled polygon (k=2), gray edges,
/// axis labels. Degenerate under sets emit points/segments with a comment.
/// Throws std::invalid_argument for k = 1 (use the CSV emitter).
std::string emit_tikz(const ExportBundle& bundle, const TikzStyle& style = {});

/// Canonical JSON serialization of the approximation and axis metadata.
std::string emit_json(const ExportBundle& bundle);

/// Inverse of emit_json; emit(parse(emit(b))) is byte-identical to emit(b).
ExportBundle parse_export_json(const std::string& text);

/// RFC-4180 CSV: header of axis names, one row per under point (user-facing
/// values), shortest round-trip decimals, CRLF line endings.
std::string emit_csv(const ExportBundle& bundle);

} // namespace momdp
