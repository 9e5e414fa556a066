#ifndef POLYCHOW_REPORT_HPP
#define POLYCHOW_REPORT_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "polychow/chow.hpp"
#include "polychow/divisors.hpp"
#include "polychow/document.hpp"

namespace polychow {

// Reports are built as a JSON tree first; the text renderer reads
// every number it prints from that tree, so the two output formats
// cannot drift apart.  Exact scalars are serialized as strings,
// structural counts as JSON integers.
using ReportJson = nlohmann::ordered_json;

ReportJson summary_section(const PolyhedralComplex& c);

ReportJson presentation_payload(const ChowData& data, const std::vector<long>& ks);
ReportJson fiber_payload(const ChowData& data, const std::vector<long>& ks, bool special);
ReportJson rank_poly_payload(const RankPolynomial& p);
ReportJson verify_payload(const RankFormulaCheck& chk, size_t lattice_rank);
ReportJson divisor_payload(const PolyhedralComplex& c, const TWeilDivisor& d);
ReportJson pieces_payload(const PiecewiseAffine& phi);
ReportJson specialize_payload(const ChowData& data, const std::vector<long>& ks);
ReportJson orbits_payload(const PolyhedralComplex& c);
ReportJson document_payload(const ComplexDocument& d);

ReportJson report_envelope(const std::string& command, const ReportJson& input,
                           const ReportJson& options, const ReportJson& summary,
                           const std::vector<std::string>& warnings, ReportJson result);

// Text form of a report envelope.  Matrices larger than 30x30 are
// elided here but always present in the JSON form.
std::string render_text(const ReportJson& report);

// format is "text" or "json"
std::string render(const ReportJson& report, const std::string& format);

}  // namespace polychow

#endif
