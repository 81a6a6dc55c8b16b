// SPDX-License-Identifier: MIT
//
// Deterministic serialization: full-precision scientific CSV and versioned
// JSON. No timestamps, no locale, no environment dependence; identical
// inputs must produce identical bytes.

#pragma once

#include <string>
#include <vector>

#include "d2lab/gallery.hpp"
#include "d2lab/ladder.hpp"
#include "d2lab/operators.hpp"
#include "d2lab/radial.hpp"
#include "d2lab/sweep.hpp"

#include "json.hpp"

namespace d2lab::io {

/// Versioned report envelope marker; bump on breaking format changes.
inline constexpr int kSchema = 1;

/// Scientific notation with 17 significant digits ("%.16e"), enough to
/// round-trip any double so downstream plotting never re-rounds.
std::string sci(double v);

/// CSV field quoting: wraps in double quotes (doubling inner quotes) only
/// when the field contains a comma, quote, or line break.
std::string csv_quote(const std::string& field);

/// Join pre-rendered cells with commas (no trailing newline).
std::string csv_join(const std::vector<std::string>& cells);

/// Write content to path, throwing std::runtime_error on any I/O failure.
void write_file(const std::string& path, const std::string& content);

/// Witness table, header `k,y_norm,Mk,eps_k,hess12_plus,hess12_minus,residual`.
std::string witness_csv(const std::vector<ladder::WitnessRecord>& records);

nlohmann::ordered_json witness_json(const std::vector<ladder::WitnessRecord>& records);

/// Per-level decay table, header
/// `k,max_abs_lap,max_abs_det,max_abs_H,sff12_plus,sff12_minus`.
std::string level_csv(const std::vector<ops::LevelRow>& rows);

/**
 * @brief Grid sample of u in local coordinates of ball k (plus family).
 *
 * grid x grid rows over [-3/4, 3/4]^2 in the first two local coordinates
 * (outer loop y1, inner y2, remaining coordinates 0), so corner rows fall
 * outside the support and sample exact zeros. Columns: coordinates, value,
 * gradient, full Hessian row-major, Laplacian, determinant, mean curvature.
 */
std::string sample_ball_csv(const ladder::Ladder& lad, int k, int grid,
                            sweep::Exec exec = sweep::Exec::parallel);

/// Grid sample of u on the global plane spanned by the center ray and the
/// (e1 - e2)/sqrt2 direction, (a, b) in [lo, hi]^2.
std::string sample_box_csv(const ladder::Ladder& lad, double lo, double hi,
                           int grid, sweep::Exec exec = sweep::Exec::parallel);

nlohmann::ordered_json radial_json(const radial::RadialReport& rep);

nlohmann::ordered_json gallery_json(const gallery::GalleryReport& rep);

} // namespace d2lab::io
