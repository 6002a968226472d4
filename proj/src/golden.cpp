#include "fib/golden.hpp"

#include <cmath>
#include <cstdio>

#include "fib/error.hpp"
#include "fib/seq.hpp"

namespace fib::golden {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

GoldenConstants golden_constants() {
    const double sqrt5 = std::sqrt(5.0);
    return {(1.0 + sqrt5) / 2.0, (1.0 - sqrt5) / 2.0, sqrt5,
            1.0 / sqrt5,         -1.0 / sqrt5,
            "(1+sqrt(5))/2",     "(1-sqrt(5))/2",
            "1/sqrt(5)",         "-1/sqrt(5)"};
}

Convergent convergent(long k) {
    require(k >= 1 && k <= 1000,
            "convergent: index outside 1..1000 (doubles overflow beyond): " +
                std::to_string(k));
    BigInt p = fib_fast(k + 2), q = fib_fast(k + 1);
    double value = p.convert_to<double>() / q.convert_to<double>();
    return {k, p, q, value, value - golden_constants().phi};
}

double nested_radical(long k) {
    require(k >= 0, "nested_radical: depth must be >= 0: " + std::to_string(k));
    double x = 1.0;
    for (long i = 0; i < k; ++i) x = std::sqrt(1.0 + x);
    return x;
}

SectionPoint golden_section_point(double a, double b) {
    require(std::isfinite(a) && std::isfinite(b), "golden_section_point: non-finite endpoint");
    require(a < b, "golden_section_point: degenerate segment (need a < b): [" + fmt(a) +
                       ", " + fmt(b) + "]");
    const double phi = golden_constants().phi;
    double c = a + (b - a) / phi;
    return {a, b, c, (b - a) / (c - a), (c - a) / (b - c)};
}

namespace {

void check_golden_ratio(double w, double h) {
    require(std::isfinite(w) && std::isfinite(h) && w > 0 && h > 0,
            "rect_subdivide: sides must be positive finite numbers");
    double long_side = std::max(w, h), short_side = std::min(w, h);
    double ratio = long_side / short_side;
    double phi = golden_constants().phi;
    require(std::fabs(ratio - phi) <= 1e-9,
            "rect_subdivide: not a golden rectangle, long/short = " + fmt(ratio) +
                " but phi = " + fmt(phi) + " (tolerance 1e-9)");
}

} // namespace

RectCut rect_subdivide(double w, double h) {
    check_golden_ratio(w, h);
    double long_side = std::max(w, h), short_side = std::min(w, h);
    double rest = long_side - short_side;
    return {short_side, std::max(short_side, rest), std::min(short_side, rest)};
}

std::vector<TraceStep> subdivide_trace(double w, double h, int steps) {
    check_golden_ratio(w, h);
    require(steps >= 1 && steps <= 64, "subdivide_trace: steps outside 1..64");
    std::vector<TraceStep> out;
    Frame r{0.0, 0.0, std::max(w, h), std::min(w, h)}; // landscape start
    for (int i = 0; i < steps; ++i) {
        TraceStep s{};
        switch (i % 4) {
            case 0: { // cut square off the left edge
                double side = r.h;
                s.square = {r.x, r.y, side, side};
                s.rest = {r.x + side, r.y, r.w - side, r.h};
                s.cut_x1 = r.x + side; s.cut_y1 = r.y;
                s.cut_x2 = r.x + side; s.cut_y2 = r.y + r.h;
                break;
            }
            case 1: { // rect is portrait; cut square off the top
                double side = r.w;
                s.square = {r.x, r.y + r.h - side, side, side};
                s.rest = {r.x, r.y, r.w, r.h - side};
                s.cut_x1 = r.x;       s.cut_y1 = r.y + r.h - side;
                s.cut_x2 = r.x + r.w; s.cut_y2 = r.y + r.h - side;
                break;
            }
            case 2: { // landscape again; cut off the right
                double side = r.h;
                s.square = {r.x + r.w - side, r.y, side, side};
                s.rest = {r.x, r.y, r.w - side, r.h};
                s.cut_x1 = r.x + r.w - side; s.cut_y1 = r.y;
                s.cut_x2 = r.x + r.w - side; s.cut_y2 = r.y + r.h;
                break;
            }
            default: { // portrait; cut off the bottom
                double side = r.w;
                s.square = {r.x, r.y, side, side};
                s.rest = {r.x, r.y + side, r.w, r.h - side};
                s.cut_x1 = r.x;       s.cut_y1 = r.y + side;
                s.cut_x2 = r.x + r.w; s.cut_y2 = r.y + side;
                break;
            }
        }
        out.push_back(s);
        r = s.rest;
    }
    return out;
}

SpiralParams golden_spiral_params() {
    return {1.0, 2.0 * std::log(golden_constants().phi) / kPi};
}

double spiral_radius(const SpiralParams& p, double theta) {
    require(p.k > 0, "spiral_radius: scale k must be positive");
    require(theta >= 0, "spiral_radius: theta must be >= 0: " + fmt(theta));
    return p.k * std::exp(p.c * theta);
}

double spiral_tangent_deg(const SpiralParams& p) {
    require(p.c > 0, "spiral_tangent_deg: growth constant must be positive");
    return std::atan(1.0 / p.c) * 180.0 / kPi;
}

double quarter_turn_growth(const SpiralParams& p) {
    return std::exp(p.c * kPi / 2.0);
}

PyramidDims unit_pyramid() { return {0.78615, 0.618034, 1.0}; }

PyramidDims keops_pyramid() { return {146.6088, 115.1839, 186.3852}; }

PyramidReport pyramid_metrics(const PyramidDims& dims) {
    require(dims.height > 0 && dims.half_base > 0 && dims.apothem > 0,
            "pyramid_metrics: dimensions must be positive");
    double hyp = std::hypot(dims.height, dims.half_base);
    double gap = std::fabs(dims.apothem - hyp) / dims.apothem;
    require(gap <= 0.005,
            "pyramid_metrics: apothem^2 = height^2 + half_base^2 violated by " +
                fmt(gap * 100) + "% (tolerance 0.5%)");
    PyramidReport r{};
    r.dims = dims;
    r.half_base_over_apothem = dims.half_base / dims.apothem;
    r.height_over_apothem = dims.height / dims.apothem;
    r.theta_deg = std::atan(dims.half_base / dims.height) * 180.0 / kPi;
    r.slope_deg = std::atan(dims.height / dims.half_base) * 180.0 / kPi;
    r.four_height_over_apothem = 4.0 * r.height_over_apothem;
    r.pi_gap = std::fabs(r.four_height_over_apothem - kPi);
    r.perimeter_over_apothem = 8.0 * r.half_base_over_apothem;
    r.circle_over_apothem = 2.0 * kPi * r.height_over_apothem;
    r.perimeter_circle_gap_pct =
        std::fabs(r.perimeter_over_apothem - r.circle_over_apothem) /
        r.perimeter_over_apothem * 100.0;
    return r;
}

std::string render_deg_min(double degrees) {
    require(std::isfinite(degrees) && degrees >= 0, "render_deg_min: want a finite angle >= 0");
    int whole = static_cast<int>(degrees);
    int minutes = static_cast<int>(std::lround((degrees - whole) * 60.0));
    if (minutes == 60) {
        ++whole;
        minutes = 0;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%d°%d'", whole, minutes);
    return buf;
}

} // namespace fib::golden
