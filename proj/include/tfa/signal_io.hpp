#pragma once

#include <string>
#include <vector>

#include "tfa/gaussian.hpp"
#include "tfa/hrt.hpp"
#include "tfa/uncertainty.hpp"

namespace tfa {

// Signal JSON: {"d": 1, "terms": [{"c": [re, im], "a": [re, im],
// "mu": [..d..], "nu": [..d..]}, ...]}; an empty terms array is the zero
// signal. Parse errors and field violations throw std::invalid_argument with
// a location diagnostic.
GaussianMixture parse_signal_json(const std::string& text);
GaussianMixture load_signal(const std::string& path);

// Point-set JSON (d = 1): {"d": 1, "points": [[x, omega], ...]}.
std::vector<PhasePoint> parse_points_json(const std::string& text);
std::vector<PhasePoint> load_points(const std::string& path);

// Reads a whole file; throws std::runtime_error naming the path on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Deterministic JSON fragments: numbers at 17 significant digits (%.17g),
// non-finite values as null, fixed field order — identical input, identical
// bytes.
std::string json_number(double v);
std::string json_bool(bool v);
std::string json_string(const std::string& v);
std::string json_pair(double a, double b);

std::string theorem_report_json(const TheoremReport& rep);
std::string sup_report_json(const SupReport& rep);
std::string sharpness_json(double N, const std::vector<SharpnessRow>& rows);
std::string sharpness_csv(const std::vector<SharpnessRow>& rows);
std::string gram_certificate_json(const GramCertificate& cert);
std::string fat_tail_report_json(const FatTailReport& rep);
std::string bounds_json(double N);
std::string bounds_csv(double N);

}  // namespace tfa
