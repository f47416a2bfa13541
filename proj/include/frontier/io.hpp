#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <string>

#include "frontier/extremal.hpp"
#include "frontier/fit.hpp"
#include "frontier/grid.hpp"
#include "frontier/loewner.hpp"
#include "frontier/paths.hpp"
#include "frontier/percolation.hpp"
#include "frontier/walk_geometry.hpp"

namespace frontier {

// All emitters are deterministic: fixed column order, %.17g floats.

// Path as CSV rows "t,re,im".
void write_path_csv(const Path2D& path, std::ostream& os);
Path2D read_path_csv(std::istream& is);

void write_indexset_csv(const IndexSet& set, std::ostream& os);
IndexSet read_indexset_csv(std::istream& is);

// Fit table: "scale,value,sigma_log,n_samples,used".
void write_fit_csv(const PowerLawFit& fit, std::ostream& os);
std::vector<FitPoint> read_fit_csv(std::istream& is);

// Polyline figure.
void write_svg(std::span<const std::complex<double>> pts, std::ostream& os,
               const std::string& stroke = "#1f4e96");

// GridMask as binary PBM (P4) with the cell size and origin in a comment.
void write_pbm(const GridMask& mask, std::ostream& os);
GridMask read_pbm(std::istream& is);

// TriRegion coloring as binary PPM (P6).
void write_region_ppm(const TriRegion& region, std::ostream& os);

// Conformal chains as JSON [[duration, drive], ...] for replay.
std::string chain_to_json(const ConformalChain& chain);
ConformalChain chain_from_json_text(const std::string& text);

// Quadrilateral: <base>.pbm for the blocked mask plus <base>.sides.json.
void write_quadrilateral(const Quadrilateral& q, const std::string& base_path);
Quadrilateral read_quadrilateral(const std::string& base_path);

std::string format_double(double v);  // %.17g

}  // namespace frontier
