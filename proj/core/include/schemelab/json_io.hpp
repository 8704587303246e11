#ifndef SCHEMELAB_JSON_IO_HPP
#define SCHEMELAB_JSON_IO_HPP

#include <string>
#include <vector>

#include "schemelab/analyzer.hpp"
#include "schemelab/capture.hpp"
#include "schemelab/coding.hpp"
#include "schemelab/config_type.hpp"
#include "schemelab/report.hpp"
#include "schemelab/scheme.hpp"

namespace schemelab {

// Scheme interchange format:
//   {"type_seq": [[m,n,r], ...], "rank": K, "levels": [[[ordinals]...], ...]}
// Loading shape-checks the data (sizes, monotonicity, bounds); running the
// verifiers is how semantic damage gets named.
std::string scheme_to_json(const Scheme& s);
Scheme scheme_from_json(const std::string& text, long long domain_cap = kDefaultDomainCap);

// Atomic write: temp file in the target directory, then rename.
void save_scheme(const Scheme& s, const std::string& path);
Scheme load_scheme(const std::string& path, long long domain_cap = kDefaultDomainCap);

void write_text_file(const std::string& path, const std::string& content);

// Decomposition tree, roots annotated on the nodes.
std::string scheme_to_dot(const Scheme& s);

std::string witness_to_json(const CaptureWitness& w);
std::string witnesses_to_json(const std::vector<CaptureWitness>& ws);
CaptureWitness witness_from_json(const std::string& text);

std::string report_to_json(const Report& r);

std::string tuple_to_json(const Tuple& t);  // ["p/q", ...]
Tuple tuple_from_json(const std::string& text);
std::string config_type_to_json(const ConfigType& t);  // [0, 1, ...]

std::string tuple_family_to_json(const OrdinalTupleFamily& fam);
OrdinalTupleFamily tuple_family_from_json(const std::string& text);

// Coded dumps: one row per point, "alpha,kind,arity,s0..sK".
std::string coded_points_to_csv(const std::vector<CodedPoint>& points);
std::string coded_points_to_json(const std::vector<CodedPoint>& points);

// Spectrum matrix: rows/cols are member indices, cells the realized
// bar-type bitstrings (diagonal empty).
std::string spectrum_to_csv(const Coding& coding, const OrdinalTupleFamily& fam);
std::string spectrum_to_json(const TypeSpectrum& sp);

}  // namespace schemelab

#endif
