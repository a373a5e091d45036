#pragma once

#include "octoclif/dual_theta.hpp"
#include "octoclif/exact_matrix.hpp"
#include "octoclif/linear_form.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace octoclif {

using nlohmann::json;

// ------------------------------------------------------------------ text

inline std::string to_text(const Rational &q) { return q.str(); }

inline std::string to_text(const GaussianRational &z) {
    if (z.is_zero()) return "0";
    std::string im;
    if (!z.im().is_zero()) {
        Rational mag = z.im().sign() < 0 ? -z.im() : z.im();
        std::string sgn = z.im().sign() < 0 ? "-" : "";
        if (mag == Rational(1)) im = sgn + "i";
        else if (mag.is_integer()) im = sgn + mag.str() + "i";
        else im = sgn + "(" + mag.str() + ")i";
    }
    if (z.re().is_zero()) return im;
    if (z.im().is_zero()) return z.re().str();
    return z.re().str() + (im[0] == '-' ? "" : "+") + im;
}

/// Coefficient prefix for a symbol term: "" for 1, "-" for -1, "i " for i,
/// otherwise the scalar in parentheses.
inline std::string coeff_prefix(const GaussianRational &c) {
    if (c.is_one()) return "";
    if (c == -GaussianRational::one()) return "-";
    if (c == GaussianRational::i()) return "i ";
    if (c == -GaussianRational::i()) return "-i ";
    if (c.is_real() && c.re().is_integer()) return c.re().str();
    return "(" + to_text(c) + ")";
}

inline void join_term(std::string &out, const std::string &term) {
    if (term.empty()) return;
    if (out.empty()) { out = term; return; }
    if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
}

inline std::string to_text(const LinearForm &x) {
    std::string out;
    if (!x.const_coeff().is_zero()) out = to_text(x.const_coeff());
    for (int a = 1; a <= kNumComponents; ++a) {
        const GaussianRational &c = x.f_coeff(a);
        if (c.is_zero()) continue;
        join_term(out, coeff_prefix(c) + "f" + std::to_string(a));
    }
    return out.empty() ? "0" : out;
}

template <typename R>
std::string to_text(const DualTheta<R> &x) {
    if (x.is_zero()) return "0";
    std::string out;
    if (!octoclif::is_zero(x.c0())) out = to_text(x.c0());
    if (!octoclif::is_zero(x.c1())) {
        std::string c1 = to_text(x.c1());
        std::string term;
        if (c1 == "1") term = "θ";
        else if (c1 == "-1") term = "-θ";
        else if (c1 == "i") term = "i θ";
        else if (c1 == "-i") term = "-i θ";
        else term = "(" + c1 + ")θ";
        join_term(out, term);
    }
    return out;
}

// ----------------------------------------------------------------- latex

inline std::string to_latex(const Rational &q) {
    if (q.is_integer()) return q.str();
    std::string num = q.num().str();
    bool neg = !num.empty() && num[0] == '-';
    if (neg) num = num.substr(1);
    return std::string(neg ? "-" : "") + "\\frac{" + num + "}{" + q.den().str() + "}";
}

inline std::string to_latex(const GaussianRational &z) {
    if (z.is_zero()) return "0";
    std::string im;
    if (!z.im().is_zero()) {
        Rational mag = z.im().sign() < 0 ? -z.im() : z.im();
        std::string sgn = z.im().sign() < 0 ? "-" : "";
        if (mag == Rational(1)) im = sgn + "i";
        else im = sgn + to_latex(mag) + "i";
    }
    if (z.re().is_zero()) return im;
    if (z.im().is_zero()) return to_latex(z.re());
    return to_latex(z.re()) + (im[0] == '-' ? "" : "+") + im;
}

inline std::string latex_coeff_prefix(const GaussianRational &c) {
    if (c.is_one()) return "";
    if (c == -GaussianRational::one()) return "-";
    if (c == GaussianRational::i()) return "i";
    if (c == -GaussianRational::i()) return "-i";
    if (c.is_real()) return to_latex(c.re());
    return "\\left(" + to_latex(c) + "\\right)";
}

inline std::string to_latex(const LinearForm &x) {
    std::string out;
    if (!x.const_coeff().is_zero()) out = to_latex(x.const_coeff());
    for (int a = 1; a <= kNumComponents; ++a) {
        const GaussianRational &c = x.f_coeff(a);
        if (c.is_zero()) continue;
        join_term(out, latex_coeff_prefix(c) + "f_{" + std::to_string(a) + "}");
    }
    return out.empty() ? "0" : out;
}

template <typename R>
std::string to_latex(const DualTheta<R> &x) {
    if (x.is_zero()) return "0";
    std::string out;
    if (!octoclif::is_zero(x.c0())) out = to_latex(x.c0());
    if (!octoclif::is_zero(x.c1())) {
        std::string c1 = to_latex(x.c1());
        std::string term;
        if (c1 == "1") term = "\\theta";
        else if (c1 == "-1") term = "-\\theta";
        else term = "\\left(" + c1 + "\\right)\\theta";
        join_term(out, term);
    }
    return out;
}

// ------------------------------------------------------------------ json
//
// Scalar encodings: rationals as "p/q" strings, Gaussian rationals as
// {"re","im"}, duals as {"c0","c1"}, linear forms as {"const","f":[7]}.

inline json to_json(const Rational &q) { return q.str(); }

inline json to_json(const GaussianRational &z) {
    return json{{"re", z.re().str()}, {"im", z.im().str()}};
}

inline json to_json(const LinearForm &x) {
    json f = json::array();
    for (int a = 1; a <= kNumComponents; ++a) f.push_back(to_json(x.f_coeff(a)));
    return json{{"const", to_json(x.const_coeff())}, {"f", f}};
}

template <typename R>
json to_json(const DualTheta<R> &x) {
    return json{{"c0", to_json(x.c0())}, {"c1", to_json(x.c1())}};
}

// ---------------------------------------------------------------- matrices

template <typename R>
json to_json(const ExactMatrix<R> &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return json{{"n", m.size()}, {"entries", rows}};
}

/// Plain-text aligned grid.
template <typename R>
std::string to_grid(const ExactMatrix<R> &m) {
    const std::size_t n = m.size();
    std::vector<std::string> cells(n * n);
    std::vector<std::size_t> width(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cells[i * n + j] = to_text(m.at(i, j));
            width[j] = std::max(width[j], cells[i * n + j].size());
        }
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
        out += "[ ";
        for (std::size_t j = 0; j < n; ++j) {
            const std::string &c = cells[i * n + j];
            out += std::string(width[j] - c.size(), ' ') + c;
            out += (j + 1 == n) ? " ]\n" : "  ";
        }
    }
    return out;
}

template <typename R>
std::string to_bmatrix(const ExactMatrix<R> &m) {
    std::string out = "\\begin{bmatrix}\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            out += to_latex(m.at(i, j));
            if (j + 1 < m.size()) out += " & ";
        }
        out += (i + 1 < m.size()) ? " \\\\\n" : "\n";
    }
    out += "\\end{bmatrix}\n";
    return out;
}

} // namespace octoclif
