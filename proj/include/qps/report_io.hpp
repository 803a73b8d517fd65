#pragma once

// CSV and JSON serialization of phase-space data and reports. CSV floats use
// '.' decimals and 17 significant digits regardless of locale.

#include "qps/admissibility.hpp"
#include "qps/effect_algebra.hpp"
#include "qps/localization.hpp"
#include "qps/tomography.hpp"
#include "qps/transform.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace qps::io {

std::string format_double(double x);

/// Columns q,p,re,im,weight.
void write_samples_csv(std::ostream& os, const GammaFunctionSamples& f);

/// Columns q,p,value,weight.
void write_density_csv(std::ostream& os, const PhaseGrid& grid, std::span<const double> values);

/// Reads q,p,value,weight rows and checks that (q, p) match the grid point by
/// point (tolerance 1e-9). Throws IoError on malformed input or mismatch.
std::vector<double> read_density_csv(std::istream& is, const PhaseGrid& grid);

/// Columns index,eigenvalue.
void write_spectrum_csv(std::ostream& os, const RVector& eigenvalues);

nlohmann::json to_json(const AdmissibilityReport& r);
nlohmann::json to_json(const OrthogonalityReport& r);
nlohmann::json to_json(const ClusteringSummary& r);
nlohmann::json to_json(const CapacityReport& r);
nlohmann::json to_json(const CompletenessReport& r);
nlohmann::json to_json(const Reconstruction& r);
nlohmann::json to_json(const AxiomReport& r);
nlohmann::json to_json(const ProjectionScanReport& r);
nlohmann::json to_json(const PovmReport& r);

/// Dumps a complex matrix as CSV rows "row,col,re,im".
void write_operator_csv(std::ostream& os, const CMatrix& m);

}  // namespace qps::io
