#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fib/csv.hpp"
#include "fib/dates.hpp"
#include "fib/decimal.hpp"
#include "fib/error.hpp"
#include "fib/golden.hpp"
#include "fib/numtheory.hpp"
#include "fib/plot.hpp"
#include "fib/seq.hpp"
#include "fib/series.hpp"
#include "fib/ta.hpp"
#include "fib/zeckendorf.hpp"

using fib::BigInt;
using fib::Date;
using fib::Decimal;
using fib::DomainError;
using ordered_json = nlohmann::ordered_json;
namespace gd = fib::golden;
namespace io = fib::io;
namespace nt = fib::nt;
namespace ta = fib::ta;
namespace zk = fib::zeck;

namespace {

// Every command renders to text and json; grid/series commands also
// carry plot TSV. Which stream is printed is decided once, at the end.
struct Output {
    std::string text;
    ordered_json json;
    std::optional<std::string> plot;
};

struct Globals {
    std::string format = "text";
    int precision = 3; // price decimals; ratios always print 6
    std::string plot_path;
};

std::string dstr(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, p);
}

BigInt big(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw DomainError("malformed integer: '" + s + "'");
    }
}

ta::PricePoint point_arg(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == s.size())
        throw DomainError("expected DATE:PRICE, got '" + s + "'");
    return {Date::parse(s.substr(0, colon)), Decimal::parse(s.substr(colon + 1))};
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Decimal> decimal_list(const std::string& s) {
    std::vector<Decimal> out;
    for (const auto& f : split_list(s)) out.push_back(Decimal::parse(f));
    return out;
}

ordered_json swing_json(const ta::Swing& s) {
    return {{"start", {{"date", s.start().date.str()}, {"price", s.start().price.str()}}},
            {"end", {{"date", s.end().date.str()}, {"price", s.end().price.str()}}}};
}

ordered_json line_json(const ta::Line& l) {
    return {{"from_date", l.from_date.str()},
            {"from_price", l.from_price.str()},
            {"to_date", l.to_date.str()},
            {"to_price", l.to_price.str()}};
}

// ---- fib ----------------------------------------------------------------

Output run_fib_n(long n) {
    BigInt v = fib::fib_fast(n);
    return {v.str() + "\n", {{"n", n}, {"value", v.str()}}, std::nullopt};
}

Output run_fib_sum(long n) {
    BigInt v = fib::sum_first(n);
    return {v.str() + "\n", {{"n", n}, {"sum", v.str()}}, std::nullopt};
}

Output run_fib_table(int n) {
    auto rows = fib::ratio_table(n);
    auto terms = fib::fib_upto(n);
    Output out;
    out.json = ordered_json::array();
    for (const auto& r : rows) {
        out.text += std::to_string(r.n) + "\t" + terms[r.n].str() + "\t" +
                    r.display().str() + "\n";
        out.json.push_back(
            {{"n", r.n}, {"term", terms[r.n].str()}, {"ratio", r.display().str()}});
    }
    return out;
}

Output run_fib_gen(const std::string& kind, long n, const std::string& alpha,
                   const std::string& beta) {
    fib::GeneralizedSpec seeds{big(alpha), big(beta)};
    BigInt v = kind == "term" ? fib::generalized_term(seeds, n)
                              : fib::generalized_sum(seeds, n);
    return {v.str() + "\n",
            {{"alpha", seeds.alpha.str()},
             {"beta", seeds.beta.str()},
             {"n", n},
             {kind, v.str()}},
            std::nullopt};
}

Output run_fib_tri(long n, const std::string& seeds_csv) {
    auto parts = split_list(seeds_csv);
    if (parts.size() != 3) throw DomainError("--seeds wants three comma-separated integers");
    fib::TribonacciSeeds seeds{big(parts[0]), big(parts[1]), big(parts[2])};
    BigInt v = fib::tribonacci(seeds, n);
    return {v.str() + "\n",
            {{"seeds", {seeds.t1.str(), seeds.t2.str(), seeds.t3.str()}},
             {"n", n},
             {"term", v.str()}},
            std::nullopt};
}

Output run_fib_identity(const std::string& name, std::optional<long> n,
                        std::optional<long> m, std::optional<std::string> alpha,
                        std::optional<std::string> beta) {
    fib::IdentityParams params;
    params.n = n;
    params.m = m;
    if (alpha.has_value() != beta.has_value())
        throw DomainError("generalized seeds want both --alpha and --beta");
    if (alpha) params.seeds = fib::GeneralizedSpec{big(*alpha), big(*beta)};
    auto rep = fib::verify_identity(fib::identity_from_name(name), params);
    Output out;
    out.text = name + ": lhs " + rep.lhs.str() + ", rhs " + rep.rhs.str() +
               ", residual " + rep.residual.str() + (rep.holds ? ", holds" : ", VIOLATED") +
               "\n";
    out.json["identity"] = name;
    if (n) out.json["n"] = *n;
    if (m) out.json["m"] = *m;
    if (params.seeds) {
        out.json["alpha"] = params.seeds->alpha.str();
        out.json["beta"] = params.seeds->beta.str();
    }
    out.json["lhs"] = rep.lhs.str();
    out.json["rhs"] = rep.rhs.str();
    out.json["residual"] = rep.residual.str();
    out.json["holds"] = rep.holds;
    return out;
}

// ---- zeck ---------------------------------------------------------------

Output run_zeck_encode(const std::string& n_text) {
    BigInt n = big(n_text);
    auto indices = zk::zeck_encode(n);
    Output out;
    out.text = zk::render_sum(indices) + "\n";
    out.json = {{"value", n.str()}, {"indices", indices}, {"rendered", zk::render_sum(indices)}};
    return out;
}

Output run_zeck_decode(const std::vector<int>& indices) {
    BigInt v = zk::zeck_decode(indices);
    return {v.str() + "\n", {{"indices", indices}, {"value", v.str()}}, std::nullopt};
}

Output run_zeck_code(const std::string& arg, bool decode) {
    if (decode) {
        BigInt v = zk::fib_code_decode(arg);
        return {v.str() + "\n", {{"code", arg}, {"value", v.str()}}, std::nullopt};
    }
    BigInt n = big(arg);
    std::string code = zk::fib_code(n);
    return {code + "\n", {{"value", n.str()}, {"code", code}}, std::nullopt};
}

// ---- nt -----------------------------------------------------------------

Output run_nt_gcd(long m, long n) {
    auto g = nt::fib_gcd(m, n);
    Output out;
    out.text = "gcd(u" + std::to_string(m) + ", u" + std::to_string(n) + ") = u" +
               std::to_string(g.d) + " = " + g.value.str() + "\n";
    out.json = {{"m", m}, {"n", n}, {"d", g.d}, {"value", g.value.str()}};
    return out;
}

Output run_nt_euclid(const std::string& a_text, const std::string& b_text) {
    auto trace = nt::euclid_trace(big(a_text), big(b_text));
    Output out;
    out.json["steps"] = ordered_json::array();
    for (const auto& s : trace.steps) {
        out.text += s.dividend.str() + " = " + s.quotient.str() + " x " +
                    s.divisor.str() + " + " + s.remainder.str() + "\n";
        out.json["steps"].push_back({{"dividend", s.dividend.str()},
                                     {"divisor", s.divisor.str()},
                                     {"quotient", s.quotient.str()},
                                     {"remainder", s.remainder.str()}});
    }
    out.text += "gcd = " + trace.gcd.str() + "\n";
    out.text += "steps = " + std::to_string(trace.count()) + "\n";
    out.json["gcd"] = trace.gcd.str();
    out.json["count"] = trace.count();
    return out;
}

Output run_nt_lame(long n) {
    auto p = nt::lame_pair(n);
    Output out;
    out.text = "a = u" + std::to_string(n + 2) + " = " + p.a.str() + ", b = u" +
               std::to_string(n + 1) + " = " + p.b.str() + ", steps = " +
               std::to_string(p.steps) + "\n";
    out.json = {{"n", p.n}, {"a", p.a.str()}, {"b", p.b.str()}, {"steps", p.steps}};
    return out;
}

Output run_nt_factor(long n) {
    Output out;
    if (n == 0) { // the appendix prints the zero row bare
        out.text = "0 : 0\n";
        out.json = {{"n", 0},
                    {"value", "0"},
                    {"factors", ordered_json::array()},
                    {"rendered", "0 : 0"}};
        return out;
    }
    auto f = nt::factorize_fib(n);
    std::string line = nt::render_factor_line(f);
    out.text = line + "\n";
    out.json["n"] = f.n;
    out.json["value"] = f.value.str();
    out.json["factors"] = ordered_json::array();
    for (const auto& fp : f.factors)
        out.json["factors"].push_back(
            {{"prime", fp.prime.str()}, {"exponent", fp.exponent}});
    out.json["rendered"] = line;
    return out;
}

Output run_nt_theorem6(long p) {
    auto w = nt::theorem6_witness(p);
    Output out;
    out.text = std::to_string(w.p) + " | u" + std::to_string(w.index) + " = " +
               w.value.str() + " (quotient " + w.quotient.str() + ")\n";
    out.json = {{"p", w.p},
                {"index", w.index},
                {"value", w.value.str()},
                {"quotient", w.quotient.str()}};
    return out;
}

Output run_nt_theorem7(long p) {
    auto c = nt::theorem7_check(p);
    Output out;
    out.text = "2p-1 = " + std::to_string(c.modulus) + " divides u" +
               std::to_string(c.p) + " (quotient " + c.quotient.str() + ")\n";
    out.json = {{"p", c.p},
                {"modulus", c.modulus},
                {"holds", c.holds},
                {"quotient", c.quotient.str()}};
    return out;
}

Output run_nt_primitive(long n) {
    auto primes = nt::primitive_divisors(n);
    Output out;
    if (primes.empty()) {
        out.text = "none\n";
    } else {
        bool first = true;
        for (auto p : primes) {
            if (!first) out.text += " ";
            out.text += std::to_string(p);
            first = false;
        }
        out.text += "\n";
    }
    out.json = {{"n", n}, {"primitive", primes}};
    return out;
}

Output run_nt_divides(long m, long n) {
    auto c = nt::divides_iff(m, n);
    Output out;
    const auto yn = [](bool b) { return b ? "yes" : "no"; };
    out.text = "u" + std::to_string(m) + " | u" + std::to_string(n) + " = " +
               yn(c.value_divides) + "; " + std::to_string(m) + " | " +
               std::to_string(n) + " = " + yn(c.index_divides) + "; equivalence " +
               (c.value_divides == c.index_divides ? "holds" : "BROKEN") + "\n";
    out.json = {{"m", m},
                {"n", n},
                {"value_divides", c.value_divides},
                {"index_divides", c.index_divides}};
    return out;
}

// ---- golden -------------------------------------------------------------

Output run_golden_constants() {
    auto c = gd::golden_constants();
    Output out;
    out.text = std::string("phi = ") + c.phi_form + " = " + dstr(c.phi) + "\n" +
               "psi = " + c.psi_form + " = " + dstr(c.psi) + "\n" +
               "sqrt5 = " + dstr(c.sqrt5) + "\n" +
               "a1 = " + c.a1_form + " = " + dstr(c.binet_a1) + "\n" +
               "a2 = " + c.a2_form + " = " + dstr(c.binet_a2) + "\n";
    out.json = {{"phi", c.phi},         {"phi_form", c.phi_form},
                {"psi", c.psi},         {"psi_form", c.psi_form},
                {"sqrt5", c.sqrt5},     {"a1", c.binet_a1},
                {"a1_form", c.a1_form}, {"a2", c.binet_a2},
                {"a2_form", c.a2_form}};
    return out;
}

Output run_golden_section(double a, double b) {
    auto s = gd::golden_section_point(a, b);
    Output out;
    out.text = "c = " + dstr(s.c) + "\n" + "ab/ac = " + dstr(s.ab_over_ac) + "\n" +
               "ac/cb = " + dstr(s.ac_over_cb) + "\n";
    out.json = {{"a", s.a},
                {"b", s.b},
                {"c", s.c},
                {"ab_over_ac", s.ab_over_ac},
                {"ac_over_cb", s.ac_over_cb}};
    return out;
}

std::string frame_str(const gd::Frame& f) {
    return "[" + dstr(f.x) + ", " + dstr(f.y) + ", " + dstr(f.w) + ", " + dstr(f.h) + "]";
}

ordered_json frame_json(const gd::Frame& f) {
    return {{"x", f.x}, {"y", f.y}, {"w", f.w}, {"h", f.h}};
}

Output run_golden_rect(double w, double h, int steps) {
    Output out;
    if (steps == 0) {
        auto cut = gd::rect_subdivide(w, h);
        out.text = "square = " + dstr(cut.square_side) + "\n" + "rest = " +
                   dstr(cut.rest_long) + " x " + dstr(cut.rest_short) + "\n";
        out.json = {{"square_side", cut.square_side},
                    {"rest_long", cut.rest_long},
                    {"rest_short", cut.rest_short}};
        return out;
    }
    auto trace = gd::subdivide_trace(w, h, steps);
    out.json = ordered_json::array();
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const auto& t = trace[i];
        out.text += "step " + std::to_string(i + 1) + ": square " + frame_str(t.square) +
                    ", rest " + frame_str(t.rest) + ", cut (" + dstr(t.cut_x1) + ", " +
                    dstr(t.cut_y1) + ")-(" + dstr(t.cut_x2) + ", " + dstr(t.cut_y2) +
                    ")\n";
        out.json.push_back({{"square", frame_json(t.square)},
                            {"rest", frame_json(t.rest)},
                            {"cut",
                             {{"x1", t.cut_x1},
                              {"y1", t.cut_y1},
                              {"x2", t.cut_x2},
                              {"y2", t.cut_y2}}}});
    }
    return out;
}

Output run_golden_spiral() {
    auto p = gd::golden_spiral_params();
    double tangent = gd::spiral_tangent_deg(p);
    double growth = gd::quarter_turn_growth(p);
    Output out;
    out.text = "k = " + dstr(p.k) + "\n" + "c = " + dstr(p.c) + "\n" + "tangent = " +
               dstr(tangent) + " deg (" + gd::render_deg_min(tangent) + ")\n" +
               "quarter-turn growth = " + dstr(growth) + "\n";
    out.json = {{"k", p.k},
                {"c", p.c},
                {"tangent_deg", tangent},
                {"tangent", gd::render_deg_min(tangent)},
                {"quarter_turn_growth", growth}};
    return out;
}

Output run_golden_pyramid(bool keops) {
    auto rep = gd::pyramid_metrics(keops ? gd::keops_pyramid() : gd::unit_pyramid());
    Output out;
    out.text = "height = " + dstr(rep.dims.height) + "\n" + "half base = " +
               dstr(rep.dims.half_base) + "\n" + "apothem = " + dstr(rep.dims.apothem) +
               "\n" + "half base / apothem = " + dstr(rep.half_base_over_apothem) + "\n" +
               "height / apothem = " + dstr(rep.height_over_apothem) + "\n" + "theta = " +
               dstr(rep.theta_deg) + " deg (" + gd::render_deg_min(rep.theta_deg) +
               ")\n" + "slope = " + dstr(rep.slope_deg) + " deg (" +
               gd::render_deg_min(rep.slope_deg) + ")\n" + "4 x height / apothem = " +
               dstr(rep.four_height_over_apothem) + " (gap to pi " + dstr(rep.pi_gap) +
               ")\n" + "perimeter / apothem = " + dstr(rep.perimeter_over_apothem) +
               "\n" + "circle / apothem = " + dstr(rep.circle_over_apothem) + "\n" +
               "perimeter vs circle gap = " + dstr(rep.perimeter_circle_gap_pct) +
               " %\n";
    out.json = {{"height", rep.dims.height},
                {"half_base", rep.dims.half_base},
                {"apothem", rep.dims.apothem},
                {"half_base_over_apothem", rep.half_base_over_apothem},
                {"height_over_apothem", rep.height_over_apothem},
                {"theta_deg", rep.theta_deg},
                {"theta", gd::render_deg_min(rep.theta_deg)},
                {"slope_deg", rep.slope_deg},
                {"slope", gd::render_deg_min(rep.slope_deg)},
                {"four_height_over_apothem", rep.four_height_over_apothem},
                {"pi_gap", rep.pi_gap},
                {"perimeter_over_apothem", rep.perimeter_over_apothem},
                {"circle_over_apothem", rep.circle_over_apothem},
                {"perimeter_circle_gap_pct", rep.perimeter_circle_gap_pct}};
    return out;
}

Output run_golden_convergent(long k) {
    auto c = gd::convergent(k);
    Output out;
    out.text = "p/q = " + c.p.str() + "/" + c.q.str() + " = " + dstr(c.value) +
               ", error = " + dstr(c.error) + "\n";
    out.json = {{"k", c.k},
                {"p", c.p.str()},
                {"q", c.q.str()},
                {"value", c.value},
                {"error", c.error}};
    return out;
}

Output run_golden_radical(long k) {
    double v = gd::nested_radical(k);
    return {dstr(v) + "\n", {{"k", k}, {"value", v}}, std::nullopt};
}

// ---- ta -----------------------------------------------------------------

Output run_ta_retrace(const std::string& start, const std::string& end,
                      const std::string& ratios, int prec) {
    ta::Swing s(point_arg(start), point_arg(end));
    ta::RatioSet set = ta::RatioSet::defaults();
    if (!ratios.empty()) set.retrace = decimal_list(ratios);
    auto levels = ta::retracement_levels(s, set);
    Output out;
    out.json["swing"] = swing_json(s);
    out.json["levels"] = ordered_json::array();
    for (const auto& lv : levels) {
        out.text += lv.ratio.str() + "\t" + lv.price.str_fixed(prec) + "\n";
        out.json["levels"].push_back(
            {{"ratio", lv.ratio.str()}, {"price", lv.price.str_fixed(prec)}});
    }
    out.plot = io::plot_retracement(s, levels);
    return out;
}

Output run_ta_targets(int rule, const ta::WaveInputs& waves, int prec) {
    auto t = ta::elliott_target(rule, waves);
    Output out;
    out.text = "rule " + std::to_string(t.rule) + " (" + t.description + ") = " +
               t.low.str_fixed(prec);
    if (t.is_range) out.text += " .. " + t.high.str_fixed(prec);
    out.text += "\n";
    out.json["rule"] = t.rule;
    out.json["description"] = t.description;
    if (t.is_range) {
        out.json["min"] = t.low.str_fixed(prec);
        out.json["max"] = t.high.str_fixed(prec);
    } else {
        out.json["target"] = t.low.str_fixed(prec);
    }
    return out;
}

Output run_ta_zones(const std::string& pivot, int count, bool skip_eight) {
    auto zones = ta::time_zones(Date::parse(pivot), count, skip_eight);
    Output out;
    out.json = ordered_json::array();
    for (const auto& z : zones) {
        out.text += std::to_string(z.offset) + "\t" + z.date.str() + "\n";
        out.json.push_back({{"offset", z.offset}, {"date", z.date.str()}});
    }
    out.plot = io::plot_time_zones(zones);
    return out;
}

Output run_ta_box(const std::string& start, const std::string& end,
                  const std::string& retrace, const std::string& extend, int prec) {
    ta::Swing s(point_arg(start), point_arg(end));
    ta::RatioSet set = ta::RatioSet::defaults();
    if (!retrace.empty()) set.retrace = decimal_list(retrace);
    if (!extend.empty()) set.extend = decimal_list(extend);
    auto box = ta::fib_box(s, set);
    Output out;
    out.text = "DT = " + std::to_string(box.duration_days) + "\n";
    out.text += "DP = " + box.price_change.str() + "\n";
    for (std::size_t i = 0; i < box.time_targets.size(); ++i) {
        const auto& t = box.time_targets[i];
        out.text += "T" + std::to_string(i + 1) + " " + t.date.str() + " (x" +
                    t.multiple.str() + ", +" + std::to_string(t.offset) + "d)\n";
    }
    for (std::size_t i = 0; i < box.price_targets.size(); ++i) {
        const auto& p = box.price_targets[i];
        out.text += "P" + std::to_string(i + 1) + " " + p.price.str_fixed(prec) + " (" +
                    p.ratio.str() + ")\n";
    }
    for (const ta::Line* d : {&box.from_top, &box.from_bottom})
        out.text += "diag " + d->from_date.str() + " " + d->from_price.str() + " -> " +
                    d->to_date.str() + " " + d->to_price.str() + "\n";

    out.json["swing"] = swing_json(s);
    out.json["duration_days"] = box.duration_days;
    out.json["price_change"] = box.price_change.str();
    out.json["time_targets"] = ordered_json::array();
    for (const auto& t : box.time_targets)
        out.json["time_targets"].push_back({{"multiple", t.multiple.str()},
                                            {"offset_days", t.offset},
                                            {"date", t.date.str()}});
    out.json["price_targets"] = ordered_json::array();
    for (const auto& p : box.price_targets)
        out.json["price_targets"].push_back(
            {{"ratio", p.ratio.str()}, {"price", p.price.str_fixed(prec)}});
    out.json["diagonals"] = {line_json(box.from_top), line_json(box.from_bottom)};
    out.plot = io::plot_box(box);
    return out;
}

Output run_ta_alternation(const std::vector<std::string>& pair_args) {
    std::vector<std::pair<Decimal, Decimal>> pairs;
    for (const auto& arg : pair_args) {
        auto colon = arg.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == arg.size())
            throw DomainError("expected MOVE:REACTION, got '" + arg + "'");
        pairs.emplace_back(Decimal::parse(arg.substr(0, colon)),
                           Decimal::parse(arg.substr(colon + 1)));
    }
    auto rep = ta::alternation_analysis(pairs);
    Output out;
    out.json["entries"] = ordered_json::array();
    for (const auto& e : rep.entries) {
        out.text += e.reaction.str() + " / " + e.move.str() + " = " + e.ratio.str() +
                    (e.label ? " (~" + e.label->str() + ")" : " (unclassified)") + "\n";
        ordered_json j = {{"move", e.move.str()},
                          {"reaction", e.reaction.str()},
                          {"ratio", e.ratio.str()}};
        j["label"] = e.label ? ordered_json(e.label->str()) : ordered_json(nullptr);
        out.json["entries"].push_back(j);
    }
    out.text += std::string("alternating: ") + (rep.alternating ? "yes" : "no") + "\n";
    out.json["alternating"] = rep.alternating;
    return out;
}

Output run_ta_zigzag(const std::string& w, const std::string& x, const std::string& y) {
    auto res = ta::zigzag_time_relation(Decimal::parse(w), Decimal::parse(x),
                                        Decimal::parse(y));
    Output out;
    out.json["relations"] = ordered_json::array();
    for (const auto& r : res.relations) {
        out.text += r.name + ": " + r.lhs.str() + " vs " + r.rhs.str() + ", residual " +
                    r.residual.str() + ", relative " + r.relative.str() + "\n";
        out.json["relations"].push_back({{"id", r.id},
                                         {"name", r.name},
                                         {"lhs", r.lhs.str()},
                                         {"rhs", r.rhs.str()},
                                         {"residual", r.residual.str()},
                                         {"relative", r.relative.str()}});
    }
    const auto& best = res.relations[res.best];
    out.text += "best: " + best.name + " (residual " + best.residual.str() + ")\n";
    out.json["best"] = {{"id", best.id}, {"name", best.name}, {"residual", best.residual.str()}};
    return out;
}

Output run_ta_pivots(const std::string& csv_path, int window, int prec) {
    ta::Series series = csv_path == "-" ? io::parse_ohlc_csv(std::cin)
                                        : io::load_csv(csv_path);
    auto pivots = ta::detect_pivots(series, window);
    Output out;
    out.json = ordered_json::array();
    for (const auto& p : pivots) {
        const char* kind = p.kind == ta::PivotKind::top ? "top" : "bottom";
        out.text += p.date.str() + "\t" + kind + "\t" + p.price.str_fixed(prec) + "\n";
        out.json.push_back(
            {{"date", p.date.str()}, {"kind", kind}, {"price", p.price.str_fixed(prec)}});
    }
    out.plot = io::plot_pivots(series, pivots);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact Fibonacci toolkit: sequences, number theory, Zeckendorf codes,"
                 " golden-ratio geometry, technical-analysis grids",
                 "fibtool"};
    app.require_subcommand(1);

    auto g = std::make_shared<Globals>();
    app.add_option("--format", g->format, "output format")
        ->check(CLI::IsMember({"text", "json", "plot"}))
        ->capture_default_str();
    app.add_option("--precision", g->precision,
                   "price decimals in text/json output (ratios always use 6)")
        ->check(CLI::Range(0, 18))
        ->capture_default_str();
    app.add_option("--plot", g->plot_path,
                   "also write plot TSV to this path (grid/series commands)");

    std::function<Output()> action;

    // fib ------------------------------------------------------------
    auto* fib_cmd = app.add_subcommand("fib", "sequence terms, sums, ratio table, identities");
    fib_cmd->require_subcommand(1)->fallthrough();
    {
        auto n = std::make_shared<long>(0);
        auto* c = fib_cmd->add_subcommand("n", "n-th term, 0-based (u_k = term k for k >= 1)");
        c->fallthrough();
        c->add_option("n", *n, "index")->required();
        c->callback([&action, n] { action = [n] { return run_fib_n(*n); }; });
    }
    {
        auto n = std::make_shared<long>(0);
        auto* c = fib_cmd->add_subcommand("sum", "u_1 + ... + u_n");
        c->fallthrough();
        c->add_option("n", *n, "term count")->required();
        c->callback([&action, n] { action = [n] { return run_fib_sum(*n); }; });
    }
    {
        auto n = std::make_shared<int>(0);
        auto* c = fib_cmd->add_subcommand("table", "successive ratios u_n / u_{n-1}");
        c->fallthrough();
        c->add_option("n", *n, "last row")->required();
        c->callback([&action, n] { action = [n] { return run_fib_table(*n); }; });
    }
    {
        struct P {
            std::string kind;
            long n = 0;
            std::string alpha, beta;
        };
        auto p = std::make_shared<P>();
        auto* c = fib_cmd->add_subcommand("gen", "generalized sequence from seeds b1, b2");
        c->fallthrough();
        c->add_option("kind", p->kind, "term or sum")
            ->required()
            ->check(CLI::IsMember({"term", "sum"}));
        c->add_option("n", p->n, "index")->required();
        c->add_option("--alpha", p->alpha, "b_1")->required();
        c->add_option("--beta", p->beta, "b_2")->required();
        c->callback([&action, p] {
            action = [p] { return run_fib_gen(p->kind, p->n, p->alpha, p->beta); };
        });
    }
    {
        struct P {
            long n = 0;
            std::string seeds;
        };
        auto p = std::make_shared<P>();
        auto* c = fib_cmd->add_subcommand("tri", "order-3 sequence from three seeds");
        c->fallthrough();
        c->add_option("n", p->n, "index")->required();
        c->add_option("--seeds", p->seeds, "t1,t2,t3")->required();
        c->callback([&action, p] { action = [p] { return run_fib_tri(p->n, p->seeds); }; });
    }
    {
        struct P {
            std::string name;
            std::optional<long> n, m;
            std::optional<std::string> alpha, beta;
        };
        auto p = std::make_shared<P>();
        auto* c = fib_cmd->add_subcommand(
            "identity", "verify a classic identity by exact residual");
        c->fallthrough();
        c->add_option("name", p->name,
                      "cassini | addition | square-diff | sum-first | growth | eleven-b7")
            ->required();
        c->add_option("-n", p->n, "main index");
        c->add_option("-m", p->m, "second index (addition)");
        c->add_option("--alpha", p->alpha, "b_1 (eleven-b7)");
        c->add_option("--beta", p->beta, "b_2 (eleven-b7)");
        c->callback([&action, p] {
            action = [p] {
                return run_fib_identity(p->name, p->n, p->m, p->alpha, p->beta);
            };
        });
    }

    // zeck -----------------------------------------------------------
    auto* zeck_cmd = app.add_subcommand("zeck", "Zeckendorf decompositions and codes");
    zeck_cmd->require_subcommand(1)->fallthrough();
    {
        auto n = std::make_shared<std::string>();
        auto* c = zeck_cmd->add_subcommand("encode", "decompose N into non-consecutive terms");
        c->fallthrough();
        c->add_option("n", *n, "positive integer")->required();
        c->callback([&action, n] { action = [n] { return run_zeck_encode(*n); }; });
    }
    {
        auto indices = std::make_shared<std::vector<int>>();
        auto* c = zeck_cmd->add_subcommand("decode", "rebuild N from term indices");
        c->fallthrough();
        c->add_option("indices", *indices, "term indices (>= 2, non-consecutive)")
            ->required()
            ->expected(-1);
        c->callback([&action, indices] {
            action = [indices] { return run_zeck_decode(*indices); };
        });
    }
    {
        struct P {
            std::string arg;
            bool decode = false;
        };
        auto p = std::make_shared<P>();
        auto* c = zeck_cmd->add_subcommand("code", "Fibonacci codeword with 11 terminator");
        c->fallthrough();
        c->add_option("value", p->arg, "integer, or codeword with --decode")->required();
        c->add_flag("--decode", p->decode, "treat the argument as a codeword");
        c->callback([&action, p] {
            action = [p] { return run_zeck_code(p->arg, p->decode); };
        });
    }

    // nt ---------------------------------------------------------------
    auto* nt_cmd = app.add_subcommand("nt", "number-theoretic structure of the sequence");
    nt_cmd->require_subcommand(1)->fallthrough();
    {
        struct P {
            long m = 0, n = 0;
        };
        auto p = std::make_shared<P>();
        auto* c = nt_cmd->add_subcommand("gcd", "gcd(u_m, u_n) = u_gcd(m, n)");
        c->fallthrough();
        c->add_option("m", p->m, "first index")->required();
        c->add_option("n", p->n, "second index")->required();
        c->callback([&action, p] { action = [p] { return run_nt_gcd(p->m, p->n); }; });
    }
    {
        struct P {
            std::string a, b;
        };
        auto p = std::make_shared<P>();
        auto* c = nt_cmd->add_subcommand("euclid", "trace Euclid's algorithm");
        c->fallthrough();
        c->add_option("a", p->a, "dividend, a >= b >= 1")->required();
        c->add_option("b", p->b, "divisor")->required();
        c->callback([&action, p] { action = [p] { return run_nt_euclid(p->a, p->b); }; });
    }
    {
        auto n = std::make_shared<long>(0);
        auto* c = nt_cmd->add_subcommand(
            "lame", "worst-case pair (u_{n+2}, u_{n+1}): exactly n steps");
        c->fallthrough();
        c->add_option("n", *n, "step count")->required();
        c->callback([&action, n] { action = [n] { return run_nt_lame(*n); }; });
    }
    {
        auto n = std::make_shared<long>(0);
        auto* c = nt_cmd->add_subcommand("factor", "factor u_n, table style");
        c->fallthrough();
        c->add_option("n", *n, "index 0..100")->required();
        c->callback([&action, n] { action = [n] { return run_nt_factor(*n); }; });
    }
    {
        auto p = std::make_shared<long>(0);
        auto* c = nt_cmd->add_subcommand(
            "theorem6", "for prime p > 5: p divides exactly one of u_{p-1}, u_{p+1}");
        c->fallthrough();
        c->add_option("p", *p, "prime > 5")->required();
        c->callback([&action, p] { action = [p] { return run_nt_theorem6(*p); }; });
    }
    {
        auto p = std::make_shared<long>(0);
        auto* c = nt_cmd->add_subcommand(
            "theorem7", "for prime p = 2,4 (mod 5) with 2p-1 prime: 2p-1 divides u_p");
        c->fallthrough();
        c->add_option("p", *p, "qualifying prime >= 7")->required();
        c->callback([&action, p] { action = [p] { return run_nt_theorem7(*p); }; });
    }
    {
        auto n = std::make_shared<long>(0);
        auto* c = nt_cmd->add_subcommand(
            "primitive", "primes dividing u_n but no earlier term");
        c->fallthrough();
        c->add_option("n", *n, "index 1..50")->required();
        c->callback([&action, n] { action = [n] { return run_nt_primitive(*n); }; });
    }
    {
        struct P {
            long m = 0, n = 0;
        };
        auto p = std::make_shared<P>();
        auto* c = nt_cmd->add_subcommand("divides", "u_m | u_n if and only if m | n");
        c->fallthrough();
        c->add_option("m", p->m, "divisor index >= 3")->required();
        c->add_option("n", p->n, "dividend index")->required();
        c->callback([&action, p] { action = [p] { return run_nt_divides(p->m, p->n); }; });
    }

    // golden -----------------------------------------------------------
    auto* gold_cmd = app.add_subcommand("golden", "golden-ratio constants and geometry");
    gold_cmd->require_subcommand(1)->fallthrough();
    {
        auto* c = gold_cmd->add_subcommand("constants", "phi, conjugate and Binet factors");
        c->fallthrough();
        c->callback([&action] { action = [] { return run_golden_constants(); }; });
    }
    {
        struct P {
            double a = 0, b = 0;
        };
        auto p = std::make_shared<P>();
        auto* c = gold_cmd->add_subcommand("section", "interior golden cut of [a, b]");
        c->fallthrough();
        c->add_option("a", p->a, "left end")->required();
        c->add_option("b", p->b, "right end")->required();
        c->callback([&action, p] {
            action = [p] { return run_golden_section(p->a, p->b); };
        });
    }
    {
        struct P {
            double w = 0, h = 0;
            int steps = 0;
        };
        auto p = std::make_shared<P>();
        auto* c = gold_cmd->add_subcommand("rect", "golden rectangle square removal");
        c->fallthrough();
        c->add_option("width", p->w, "long side")->required();
        c->add_option("height", p->h, "short side")->required();
        c->add_option("--steps", p->steps, "trace this many removals")->check(CLI::Range(0, 64));
        c->callback([&action, p] {
            action = [p] { return run_golden_rect(p->w, p->h, p->steps); };
        });
    }
    {
        auto* c = gold_cmd->add_subcommand("spiral", "logarithmic spiral with quarter-turn growth phi");
        c->fallthrough();
        c->callback([&action] { action = [] { return run_golden_spiral(); }; });
    }
    {
        auto keops = std::make_shared<bool>(false);
        auto* c = gold_cmd->add_subcommand("pyramid", "right-triangle pyramid ratio report");
        c->fallthrough();
        c->add_flag("--keops", *keops, "use the measured Keops dimensions");
        c->callback([&action, keops] {
            action = [keops] { return run_golden_pyramid(*keops); };
        });
    }
    {
        auto k = std::make_shared<long>(0);
        auto* c = gold_cmd->add_subcommand("convergent", "continued-fraction convergent of phi");
        c->fallthrough();
        c->add_option("k", *k, "depth 1..1000")->required();
        c->callback([&action, k] { action = [k] { return run_golden_convergent(*k); }; });
    }
    {
        auto k = std::make_shared<long>(0);
        auto* c = gold_cmd->add_subcommand("radical", "nested radical sqrt(1 + sqrt(1 + ...))");
        c->fallthrough();
        c->add_option("k", *k, "iterations")->required();
        c->callback([&action, k] { action = [k] { return run_golden_radical(*k); }; });
    }

    // ta -----------------------------------------------------------------
    auto* ta_cmd = app.add_subcommand("ta", "price/time grids over swings and series");
    ta_cmd->require_subcommand(1)->fallthrough();
    {
        struct P {
            std::string start, end, ratios;
        };
        auto p = std::make_shared<P>();
        auto* c = ta_cmd->add_subcommand("retrace", "retracement levels of a swing");
        c->fallthrough();
        c->add_option("--start", p->start, "DATE:PRICE")->required();
        c->add_option("--end", p->end, "DATE:PRICE")->required();
        c->add_option("--ratios", p->ratios, "comma-separated ascending ratios");
        c->callback([&action, p, g] {
            action = [p, g] {
                return run_ta_retrace(p->start, p->end, p->ratios, g->precision);
            };
        });
    }
    {
        struct P {
            int rule = 0;
            ta::WaveInputs waves;
            std::string impulse_len, wave1_len, wave2_base, wave1_base, wave1_top,
                wave3_top, wave4_base, wave_a_len, wave_a_base, prev_len, factor;
        };
        auto p = std::make_shared<P>();
        auto* c = ta_cmd->add_subcommand("targets", "Elliott wave target rules 1..8");
        c->fallthrough();
        c->add_option("--rule", p->rule, "rule number")->required();
        c->add_option("--impulse-len", p->impulse_len, "rule 1: known unextended wave");
        c->add_option("--wave1-len", p->wave1_len, "rule 2");
        c->add_option("--wave2-base", p->wave2_base, "rule 2");
        c->add_option("--wave1-base", p->wave1_base, "rules 3, 4");
        c->add_option("--wave1-top", p->wave1_top, "rule 3");
        c->add_option("--wave3-top", p->wave3_top, "rule 4");
        c->add_option("--wave4-base", p->wave4_base, "rule 4");
        c->add_option("--wave-a-len", p->wave_a_len, "rules 5, 6, 7");
        c->add_option("--wave-a-base", p->wave_a_base, "rule 6");
        c->add_option("--prev-len", p->prev_len, "rule 8");
        c->add_option("--factor", p->factor, "rule 8 ratio, default 0.618");
        c->callback([&action, p, g] {
            action = [p, g] {
                const auto set = [](std::optional<Decimal>& slot, const std::string& s) {
                    if (!s.empty()) slot = Decimal::parse(s);
                };
                set(p->waves.impulse_len, p->impulse_len);
                set(p->waves.wave1_len, p->wave1_len);
                set(p->waves.wave2_base, p->wave2_base);
                set(p->waves.wave1_base, p->wave1_base);
                set(p->waves.wave1_top, p->wave1_top);
                set(p->waves.wave3_top, p->wave3_top);
                set(p->waves.wave4_base, p->wave4_base);
                set(p->waves.wave_a_len, p->wave_a_len);
                set(p->waves.wave_a_base, p->wave_a_base);
                set(p->waves.prev_len, p->prev_len);
                set(p->waves.factor, p->factor);
                return run_ta_targets(p->rule, p->waves, g->precision);
            };
        });
    }
    {
        struct P {
            std::string pivot;
            int count = 0;
            bool skip_eight = false;
        };
        auto p = std::make_shared<P>();
        auto* c = ta_cmd->add_subcommand("zones", "Fibonacci time zones from a pivot date");
        c->fallthrough();
        c->add_option("--pivot", p->pivot, "YYYY-MM-DD")->required();
        c->add_option("--count", p->count, "how many offsets")->required();
        c->add_flag("--skip-eight", p->skip_eight, "omit the 8 as some tabulations do");
        c->callback([&action, p] {
            action = [p] { return run_ta_zones(p->pivot, p->count, p->skip_eight); };
        });
    }
    {
        struct P {
            std::string start, end, retrace, extend;
        };
        auto p = std::make_shared<P>();
        auto* c = ta_cmd->add_subcommand("box", "price/time box spanned by a swing");
        c->fallthrough();
        c->add_option("--start", p->start, "DATE:PRICE")->required();
        c->add_option("--end", p->end, "DATE:PRICE")->required();
        c->add_option("--retrace", p->retrace, "override retrace ratios");
        c->add_option("--extend", p->extend, "override time multiples after 1.0");
        c->callback([&action, p, g] {
            action = [p, g] {
                return run_ta_box(p->start, p->end, p->retrace, p->extend, g->precision);
            };
        });
    }
    {
        auto pairs = std::make_shared<std::vector<std::string>>();
        auto* c = ta_cmd->add_subcommand("alternation", "reaction ratios vs 0.382 / 0.618");
        c->fallthrough();
        c->add_option("--pair", *pairs, "MOVE:REACTION, repeatable")
            ->required()
            ->take_all();
        c->callback([&action, pairs] {
            action = [pairs] { return run_ta_alternation(*pairs); };
        });
    }
    {
        struct P {
            std::string w, x, y;
        };
        auto p = std::make_shared<P>();
        auto* c = ta_cmd->add_subcommand("zigzag", "best duration relation among W, X, Y");
        c->fallthrough();
        c->add_option("w", p->w, "W leg days")->required();
        c->add_option("x", p->x, "X leg days")->required();
        c->add_option("y", p->y, "Y leg days")->required();
        c->callback([&action, p] {
            action = [p] { return run_ta_zigzag(p->w, p->x, p->y); };
        });
    }
    {
        struct P {
            std::string csv;
            int window = 0;
        };
        auto p = std::make_shared<P>();
        auto* c = ta_cmd->add_subcommand("pivots", "strict window extrema of a CSV series");
        c->fallthrough();
        c->add_option("--csv", p->csv, "OHLC or date,close file; - for stdin")->required();
        c->add_option("--window", p->window, "half window k")->required();
        c->callback([&action, p, g] {
            action = [p, g] { return run_ta_pivots(p->csv, p->window, g->precision); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e); // prints help or the parse error itself
        return rc == 0 ? 0 : 2;
    }

    try {
        Output out = action();
        if (!g->plot_path.empty()) {
            if (!out.plot) {
                std::cerr << "error: this command produces no plot data\n";
                return 2;
            }
            std::ofstream f(g->plot_path, std::ios::binary);
            if (!f) throw DomainError("cannot write plot file: " + g->plot_path);
            f << *out.plot;
        }
        if (g->format == "text") {
            std::cout << out.text;
        } else if (g->format == "json") {
            std::cout << out.json.dump(2) << "\n";
        } else {
            if (!out.plot) {
                std::cerr << "error: this command produces no plot data\n";
                return 2;
            }
            std::cout << *out.plot;
        }
        return 0;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
