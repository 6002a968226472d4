#pragma once

#include <string>
#include <vector>

#include "fib/bigint.hpp"

namespace fib::golden {

// Golden-ratio geometry in doubles. Unlike the integer modules this one
// is approximate by nature, so every contract states its tolerance
// explicitly instead of pretending to be exact.

struct GoldenConstants {
    double phi;      // (1+sqrt(5))/2
    double psi;      // (1-sqrt(5))/2, the conjugate root
    double sqrt5;
    double binet_a1; //  1/sqrt(5)
    double binet_a2; // -1/sqrt(5)
    const char* phi_form;
    const char* psi_form;
    const char* a1_form;
    const char* a2_form;
};

GoldenConstants golden_constants();

// Continued-fraction convergent of phi: p/q = u_{k+2}/u_{k+1}.
struct Convergent {
    long k;
    BigInt p, q;
    double value; // p/q in doubles
    double error; // value - phi; sign alternates with k
};

Convergent convergent(long k); // 1 <= k <= 1000 (double range beyond)

// Nested radical x_0 = 1, x_{k+1} = sqrt(1 + x_k) -> phi.
double nested_radical(long k); // k >= 0

// Interior point C of AB with AB/AC = AC/CB = phi:
// AC = |AB|/phi measured from A.
struct SectionPoint {
    double a, b, c;
    double ab_over_ac, ac_over_cb; // both ~phi
};

SectionPoint golden_section_point(double a, double b); // needs a < b

// Axis-aligned rectangle by origin corner and extents.
struct Frame {
    double x, y, w, h;
};

// One square-removal step: the cut segment plus both parts.
struct TraceStep {
    Frame square, rest;
    double cut_x1, cut_y1, cut_x2, cut_y2;
};

// Verifies |w/h - phi| <= 1e-9 on the normalized (long/short) ratio,
// then removes the largest square. The error message carries the
// measured ratio when the gate fails.
struct RectCut {
    double square_side;   // = h, the short side
    double rest_long, rest_short; // again in long/short order
};

RectCut rect_subdivide(double w, double h);

// Square-removal spiral: cut sides rotate left, top, right, bottom.
// Starts from frame (0, 0, w, h) with w/h golden as above.
std::vector<TraceStep> subdivide_trace(double w, double h, int steps); // 1..64

// Logarithmic spiral r = k * exp(c * theta) with quarter-turn growth phi.
struct SpiralParams {
    double k, c; // c = (2/pi) * ln(phi) = 0.3063489...
};

SpiralParams golden_spiral_params();
double spiral_radius(const SpiralParams& p, double theta); // theta >= 0
double spiral_tangent_deg(const SpiralParams& p);          // atan(1/c) ~ 72.97
double quarter_turn_growth(const SpiralParams& p);         // exp(c*pi/2) ~ phi

// Right-triangle pyramid metrics: apothem^2 = height^2 + half_base^2
// within 0.5%, everything reported relative to the apothem.
struct PyramidDims {
    double height, half_base, apothem;
};

PyramidDims unit_pyramid();  // 0.78615 / 0.618034 / 1
PyramidDims keops_pyramid(); // 146.6088 / 115.1839 / 186.3852 (meters)

struct PyramidReport {
    PyramidDims dims;
    double half_base_over_apothem;   // ~ 1/phi
    double height_over_apothem;      // ~ 1/sqrt(phi)
    double theta_deg;                // atan(half_base/height), ~38°10'
    double slope_deg;                // atan(height/half_base), ~51°50'
    double four_height_over_apothem; // ~ 3.1446, the "pyramid pi"
    double pi_gap;                   // |four_height_over_apothem - pi|
    double perimeter_over_apothem;   // 8 * half_base / apothem
    double circle_over_apothem;      // 2*pi * height / apothem
    double perimeter_circle_gap_pct; // relative gap, percent
};

PyramidReport pyramid_metrics(const PyramidDims& dims);

// "38°10'" with round-to-nearest minute.
std::string render_deg_min(double degrees);

} // namespace fib::golden
