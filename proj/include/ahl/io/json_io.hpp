#pragma once

#include "ahl/cells/cells.hpp"
#include "ahl/eqk/gkm.hpp"
#include "ahl/error.hpp"
#include "ahl/jring/jring.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>

namespace ahl {

using Json = nlohmann::ordered_json;

// {"-1":"1","1":"1"} for v + v^{-1}, exponents ascending.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);
// A polynomial in q = v^2 stored with even v-exponents, keyed by q-exponent.
Json q_poly_to_json(const LaurentPoly& p);
LaurentPoly q_poly_from_json(const Json& j);

Json to_json(const TorusRingElt& x);
TorusRingElt torus_from_json(const Json& j, int rank);
Json to_json(const CyclotomicValue& x);

// {"word":[...],"omega":k}; decoding rejects non-reduced words.
Json element_to_json(const WeylGroup& g, const WeylElt& w);
WeylElt element_from_json(const WeylGroup& g, const Json& j);

Json kl_table_to_json(const KLTable& t);
// Throws Error("corrupt cache: ...") on any structural problem.
std::shared_ptr<const KLTable> kl_table_from_json(const Json& j);

std::string cache_file_name(const std::string& datum, int radius);

struct TableSource {
  std::shared_ptr<const KLTable> table;
  bool loaded = false;
  std::optional<std::filesystem::path> written;
  // Radii of other cached tables checked against this one.
  std::vector<int> validated;
};

// Loads kl_<datum>_r<radius>.json from the cache directory if present,
// otherwise computes the table and, when `write` is set, stores it. Every other
// cached radius of the same datum is checked for agreement on the overlap.
TableSource load_or_build_table(const WeylGroup& g, int radius,
                                const std::optional<std::filesystem::path>& cache_dir, int jobs, bool write);

std::string dump(const Json& j);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

Json jelt_to_json(const WeylGroup& g, const JElt& a);
Json cells_to_json(const CellStructure& cs, CellSide side);
Json report_to_json(const IdentityReport& r);
Json to_json(const EqKClass& c);

}  // namespace ahl
