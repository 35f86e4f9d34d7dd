#pragma once

#include <stdexcept>
#include <string>

#include "folia/foliation.hpp"

namespace folia {

// World-coordinate window and raster size for a picture.
struct Viewport {
    Rat x_min, x_max, y_min, y_max;
    unsigned width_px = 800;
    unsigned height_px = 600;
    unsigned samples_per_curve = 256;  // values below 16 are raised to 16

    static Viewport standard();
};

// Raised when the viewport window or raster has no area.
struct EmptyViewport : std::runtime_error {
    explicit EmptyViewport(const std::string& what) : std::runtime_error(what) {}
};

// Draws the configuration as an SVG 1.1 document: one dashed <line> per
// vertical separatrix, one bold <path> per inner separatrix curve, and one
// thin <path> per canonical-region representative; maps without vertical
// separatrices get a small fan of level curves instead.  Leaves sharing a
// level share a "level-<index>" stroke class.  Curves are sampled on a
// uniform x grid; samples where |y| exceeds ten viewport heights are dropped
// and the polyline splits there.  This is the only module that computes with
// floating point.
std::string render_svg(const Configuration& conf, const Viewport& vp);

}  // namespace folia
