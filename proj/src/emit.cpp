#include "fdstencil/emit.hpp"

#include <sstream>
#include <stdexcept>

namespace fdstencil {

namespace {

// UTF-8 spellings used by the text renderer.
constexpr const char* kApprox = "≈";
constexpr const char* kMinus = "−";
constexpr const char* kDot = "·";

std::string text_node(const Rational& offset) {
    if (offset.is_zero()) return "f(t)";
    const Rational mag = abs(offset);
    std::string inner = "t";
    inner += offset.sign() > 0 ? "+" : kMinus;
    if (mag == Rational(1)) {
        inner += "h";
    } else if (mag.is_integer()) {
        inner += mag.str() + "h";
    } else {
        inner += "(" + mag.str() + ")h";
    }
    return "f(" + inner + ")";
}

std::string latex_rational(const Rational& r) {
    if (r.denominator() == 1) return r.numerator().str();
    std::string s = r.numerator() < 0 ? "-" : "";
    s += "\\frac{" + abs(r).numerator().str() + "}{" + r.denominator().str() + "}";
    return s;
}

std::string latex_node(const Rational& offset) {
    if (offset.is_zero()) return "f(t)";
    const Rational mag = abs(offset);
    std::string inner = "t ";
    inner += offset.sign() > 0 ? "+ " : "- ";
    if (mag == Rational(1)) {
        inner += "h";
    } else if (mag.is_integer()) {
        inner += mag.str() + "h";
    } else {
        inner += latex_rational(mag) + " h";
    }
    return "f\\left(" + inner + "\\right)";
}

std::string c_rational(const Rational& r) {
    return "(" + r.numerator().str() + ".0/" + r.denominator().str() + ".0)";
}

std::string render_text(const Stencil& stencil) {
    std::ostringstream os;
    os << derivative_label(stencil.k) << "(t) " << kApprox << " (1/h";
    if (stencil.k > 1) os << "^" << stencil.k;
    os << ")[ ";
    bool first = true;
    for (int j = 0; j < stencil.nodes.size(); ++j) {
        const Rational& c = stencil.coefficients[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << kMinus;
        } else {
            os << ' ' << (c.sign() < 0 ? kMinus : "+") << ' ';
        }
        first = false;
        const Rational mag = abs(c);
        if (mag != Rational(1)) {
            os << mag.str() << kDot;
        }
        os << text_node(stencil.nodes.offset(j));
    }
    os << " ]";
    return os.str();
}

std::string render_latex(const Stencil& stencil) {
    std::ostringstream os;
    os << derivative_label(stencil.k) << "(t) \\approx \\frac{1}{h";
    if (stencil.k > 1) os << "^{" << stencil.k << "}";
    os << "}\\left[ ";
    bool first = true;
    for (int j = 0; j < stencil.nodes.size(); ++j) {
        const Rational& c = stencil.coefficients[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "- ";
        } else {
            os << ' ' << (c.sign() < 0 ? '-' : '+') << ' ';
        }
        first = false;
        const Rational mag = abs(c);
        if (mag != Rational(1)) {
            os << latex_rational(mag) << ' ';
        }
        os << latex_node(stencil.nodes.offset(j));
    }
    os << " \\right]";
    return os.str();
}

std::string render_c_expr(const Stencil& stencil) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (int j = 0; j < stencil.nodes.size(); ++j) {
        const Rational& c = stencil.coefficients[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_rational(c) << "*f(t + " << c_rational(stencil.nodes.offset(j)) << "*h)";
    }
    if (first) os << "0.0";
    os << ") / (h";
    for (int i = 1; i < stencil.k; ++i) os << "*h";
    os << ')';
    return os.str();
}

}  // namespace

EmitFormat parse_emit_format(const std::string& name) {
    if (name == "text") return EmitFormat::text;
    if (name == "latex") return EmitFormat::latex;
    if (name == "c-expr") return EmitFormat::c_expr;
    if (name == "json") return EmitFormat::json;
    throw std::invalid_argument("unknown format: '" + name + "'");
}

std::string derivative_label(int k) {
    switch (k) {
        case 1: return "f'";
        case 2: return "f''";
        case 3: return "f'''";
        default: return "f^(" + std::to_string(k) + ")";
    }
}

std::string render_stencil(const Stencil& stencil, EmitFormat format) {
    switch (format) {
        case EmitFormat::text: return render_text(stencil);
        case EmitFormat::latex: return render_latex(stencil);
        case EmitFormat::c_expr: return render_c_expr(stencil);
        case EmitFormat::json: return stencil_to_json(stencil).dump();
    }
    throw std::logic_error("unhandled format");
}

nlohmann::json stencil_to_json(const Stencil& stencil) {
    nlohmann::json nodes = nlohmann::json::array();
    nlohmann::json coeffs = nlohmann::json::array();
    nlohmann::json decimals = nlohmann::json::array();
    for (int j = 0; j < stencil.nodes.size(); ++j) {
        nodes.push_back(stencil.nodes.offset(j).str());
        const Rational& c = stencil.coefficients[static_cast<std::size_t>(j)];
        coeffs.push_back(c.str());
        decimals.push_back(c.to_double());
    }
    return nlohmann::json{{"nodes", nodes},
                          {"k", stencil.k},
                          {"coefficients", coeffs},
                          {"coefficients_decimal", decimals},
                          {"formal_order", stencil.formal_order},
                          {"weighted_power_sum", stencil.power_sum.str()},
                          {"leading_coefficient", stencil.leading_coefficient.str()}};
}

Stencil stencil_from_json(const nlohmann::json& j) {
    if (!j.contains("nodes") || !j.contains("k")) {
        throw std::invalid_argument("stencil JSON requires 'nodes' and 'k'");
    }
    RationalVector offsets;
    for (const auto& node : j.at("nodes")) {
        offsets.push_back(Rational::parse(node.get<std::string>()));
    }
    Stencil stencil = generate_stencil(NodeSet(std::move(offsets)), j.at("k").get<int>());
    if (j.contains("coefficients")) {
        const auto& given = j.at("coefficients");
        if (given.size() != stencil.coefficients.size()) {
            throw std::invalid_argument("coefficient count does not match node count");
        }
        for (std::size_t i = 0; i < stencil.coefficients.size(); ++i) {
            if (Rational::parse(given[i].get<std::string>()) != stencil.coefficients[i]) {
                throw std::invalid_argument("coefficients do not match the node set");
            }
        }
    }
    return stencil;
}

nlohmann::json bound_report_json(const ErrorModel& model) {
    const Stencil& stencil = model.stencil();
    return nlohmann::json{{"bound", worst_case_bound(model)},
                          {"M", model.derivative_bound()},
                          {"h", model.step()},
                          {"delta_max", stencil.nodes.delta_max().str()},
                          {"epsilon", stencil.nodes.epsilon().str()},
                          {"order", stencil.formal_order}};
}

nlohmann::json leading_term_json(const LeadingTerm& term) {
    nlohmann::json j{{"coefficient", term.coefficient.str()},
                     {"derivative_order", term.derivative_order},
                     {"step_power", term.step_power}};
    if (term.vanishes) {
        j["flag"] = "order exceeds n-k";
    }
    return j;
}

}  // namespace fdstencil
