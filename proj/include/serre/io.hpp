#ifndef SERRE_IO_HPP
#define SERRE_IO_HPP

#include <json.hpp>

#include <string>

#include "serre/classify.hpp"
#include "serre/theorems.hpp"

namespace serre {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

Json to_json(const CirculantGraph& g);          // {"n":..,"gens":[..]}
CirculantGraph circulant_from_json(const Json& j);

Json to_json(const SimplicialComplex& c);       // {"n":..,"facets":[[..],..]}
SimplicialComplex complex_from_json(const Json& j);

// Plain-text complex format: vertex count on line 1, one facet per line as
// space-separated vertices; a blank line is the empty facet.
SimplicialComplex complex_from_text(const std::string& text);

Json to_json(const HomologyProfile& p);         // {"dims":[{"i":..,"rank":..,"torsion":[..]},..]}

Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json to_json(const ClassificationReport& r);
std::string report_table(const ClassificationReport& r);

Json sweep_to_json(const SweepResult& r, bool with_runtime = false);
std::string sweep_table(const SweepResult& r);
std::string sweep_csv_row(const SweepResult& r);

Json record_to_json(const GraphRecord& r);
void record_merge_from_json(GraphRecord& r, const Json& j);

std::string homology_table(const HomologyProfile& p);

}  // namespace serre

#endif
