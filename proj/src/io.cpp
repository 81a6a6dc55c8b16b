// SPDX-License-Identifier: MIT

#include "d2lab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace d2lab::io {

std::string sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_join(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_quote(cells[i]);
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("io: cannot open for writing: " + path);
    }
    f << content;
    if (!f) {
        throw std::runtime_error("io: write failed: " + path);
    }
}

std::string witness_csv(const std::vector<ladder::WitnessRecord>& records) {
    std::string out = "k,y_norm,Mk,eps_k,hess12_plus,hess12_minus,residual\n";
    for (const auto& rec : records) {
        out += csv_join({std::to_string(rec.k), sci(rec.y_norm), sci(rec.M),
                         sci(rec.eps), sci(rec.hess12_plus),
                         sci(rec.hess12_minus), sci(rec.residual)});
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json
witness_json(const std::vector<ladder::WitnessRecord>& records) {
    nlohmann::ordered_json doc;
    doc["schema"] = kSchema;
    doc["table"] = "witness";
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& rec : records) {
        nlohmann::ordered_json row;
        row["k"] = rec.k;
        row["y_norm"] = rec.y_norm;
        row["Mk"] = rec.M;
        row["eps_k"] = rec.eps;
        row["hess12_plus"] = rec.hess12_plus;
        row["hess12_minus"] = rec.hess12_minus;
        row["residual"] = rec.residual;
        rows.push_back(row);
    }
    doc["rows"] = rows;
    return doc;
}

std::string level_csv(const std::vector<ops::LevelRow>& rows) {
    std::string out = "k,max_abs_lap,max_abs_det,max_abs_H,sff12_plus,sff12_minus\n";
    for (const auto& row : rows) {
        out += csv_join({std::to_string(row.k), sci(row.max_abs_lap),
                         sci(row.max_abs_det), sci(row.max_abs_H),
                         sci(row.sff12_plus), sci(row.sff12_minus)});
        out += '\n';
    }
    return out;
}

namespace {

std::string sample_header(int n, char coord) {
    std::vector<std::string> cells;
    for (int i = 1; i <= n; ++i) {
        cells.push_back(std::string(1, coord) + std::to_string(i));
    }
    cells.push_back("u");
    for (int i = 1; i <= n; ++i) cells.push_back("g" + std::to_string(i));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            cells.push_back("h" + std::to_string(i) + std::to_string(j));
        }
    }
    cells.push_back("lap");
    cells.push_back("det");
    cells.push_back("H");
    return csv_join(cells) + "\n";
}

std::string sample_row(const block::PointEval& pe, const Vec& coords) {
    const int n = pe.hessian.dim();
    std::vector<std::string> cells;
    for (double c : coords) cells.push_back(sci(c));
    cells.push_back(sci(pe.value));
    for (double g : pe.gradient) cells.push_back(sci(g));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cells.push_back(sci(pe.hessian(i, j)));
        }
    }
    const ops::GeometryEval geo = ops::mean_curvature(pe);
    cells.push_back(sci(pe.laplacian));
    cells.push_back(sci(geo.detH));
    cells.push_back(sci(geo.H));
    return csv_join(cells) + "\n";
}

} // namespace

std::string sample_ball_csv(const ladder::Ladder& lad, int k, int grid,
                            sweep::Exec exec) {
    if (grid < 2) {
        throw std::invalid_argument("sample: grid must be at least 2");
    }
    const int n = lad.params.n;
    const double lo = -0.75, hi = 0.75;
    const std::size_t g = static_cast<std::size_t>(grid);
    const auto rows = sweep::tabulate<std::string>(
        g * g, exec, [&lad, k, n, lo, hi, g](std::size_t idx) {
            const std::size_t i = idx / g;
            const std::size_t j = idx % g;
            Vec y(static_cast<std::size_t>(n), 0.0);
            y[0] = lo + (hi - lo) * static_cast<double>(i)
                           / static_cast<double>(g - 1);
            y[1] = lo + (hi - lo) * static_cast<double>(j)
                           / static_cast<double>(g - 1);
            const block::PointEval pe = u_eval_local(lad, k, false, y);
            return sample_row(pe, y);
        });
    std::string out = sample_header(n, 'y');
    for (const std::string& row : rows) out += row;
    return out;
}

std::string sample_box_csv(const ladder::Ladder& lad, double lo, double hi,
                           int grid, sweep::Exec exec) {
    if (grid < 2) {
        throw std::invalid_argument("sample: grid must be at least 2");
    }
    if (!(lo < hi)) {
        throw std::invalid_argument("sample: box must satisfy lo < hi");
    }
    const int n = lad.params.n;
    Vec cdir(static_cast<std::size_t>(n),
             1.0 / std::sqrt(static_cast<double>(n)));
    Vec wdir(static_cast<std::size_t>(n), 0.0);
    wdir[0] = 1.0 / std::numbers::sqrt2;
    wdir[1] = -1.0 / std::numbers::sqrt2;
    const std::size_t g = static_cast<std::size_t>(grid);
    const auto rows = sweep::tabulate<std::string>(
        g * g, exec, [&lad, &cdir, &wdir, lo, hi, g](std::size_t idx) {
            const std::size_t i = idx / g;
            const std::size_t j = idx % g;
            const double a = lo + (hi - lo) * static_cast<double>(i)
                                     / static_cast<double>(g - 1);
            const double b = lo + (hi - lo) * static_cast<double>(j)
                                     / static_cast<double>(g - 1);
            Vec x(cdir.size());
            for (std::size_t c = 0; c < x.size(); ++c) {
                x[c] = a * cdir[c] + b * wdir[c];
            }
            const block::PointEval pe = u_eval(lad, x);
            return sample_row(pe, x);
        });
    std::string out = sample_header(n, 'x');
    for (const std::string& row : rows) out += row;
    return out;
}

nlohmann::ordered_json radial_json(const radial::RadialReport& rep) {
    nlohmann::ordered_json doc;
    doc["schema"] = kSchema;
    doc["profile"] = rep.name;
    doc["classification"] = radial::to_string(rep.classification);
    doc["detail"] = rep.detail;

    nlohmann::ordered_json lim1;
    lim1["kind"] = rep.lim_psi1_over_s == radial::Lim1::finite ? "finite"
                   : rep.lim_psi1_over_s == radial::Lim1::absent
                       ? "absent"
                       : "inconclusive";
    lim1["value"] = rep.lim1_value;
    lim1["spread"] = rep.lim1_spread;
    doc["lim_psi1_over_s"] = lim1;

    nlohmann::ordered_json lim2;
    switch (rep.lim_psi2) {
    case radial::Lim2::finite:
        lim2["kind"] = "finite";
        break;
    case radial::Lim2::absent_bounded:
        lim2["kind"] = "absent_bounded";
        break;
    case radial::Lim2::absent_unbounded:
        lim2["kind"] = "absent_unbounded";
        break;
    case radial::Lim2::inconclusive:
        lim2["kind"] = "inconclusive";
        break;
    }
    lim2["value"] = rep.lim2_value;
    lim2["spread"] = rep.lim2_spread;
    doc["lim_psi2"] = lim2;

    doc["hypotheses_ok"] = rep.hypotheses_ok;
    doc["lhopital_ok"] = rep.lhopital_ok;
    doc["case_f_ok"] = rep.case_f_ok;

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : rep.rows) {
        nlohmann::ordered_json r;
        r["s"] = row.s;
        r["psi1_over_s"] = row.psi1_over_s;
        r["psi2"] = row.psi2;
        r["lap3"] = row.lap3;
        rows.push_back(r);
    }
    doc["rows"] = rows;
    return doc;
}

nlohmann::ordered_json gallery_json(const gallery::GalleryReport& rep) {
    nlohmann::ordered_json doc;
    doc["schema"] = kSchema;
    doc["fixture"] = gallery::to_string(rep.which);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : rep.rows) {
        nlohmann::ordered_json r;
        r["r"] = row.r;
        r["cross_gap"] = row.cross_gap;
        r["lap_band"] = row.lap_band;
        r["hess_max"] = row.hess_max;
        r["remainder"] = row.remainder;
        rows.push_back(r);
    }
    doc["rows"] = rows;
    doc["cross_exceeds_10_with_small_lap"] = rep.cross_exceeds_10_with_small_lap;
    doc["band_shrinks"] = rep.band_shrinks;
    doc["remainder_grows"] = rep.remainder_grows;
    doc["cross_spread"] = rep.cross_spread;
    doc["hess_sup"] = rep.hess_sup;
    return doc;
}

} // namespace d2lab::io
