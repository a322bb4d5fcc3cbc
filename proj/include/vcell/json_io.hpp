#ifndef VCELL_JSON_IO_HPP
#define VCELL_JSON_IO_HPP

#include "vcell/dualvol.hpp"
#include "vcell/forms.hpp"
#include "vcell/multipoly.hpp"
#include "vcell/unipoly.hpp"

#include <json.hpp>

#include <string>

namespace vcell::io {

using json = nlohmann::json;

// MultiPoly <-> {"vars": [...], "terms": [{"exp": [...], "num": "...", "den": "..."}]}
// integers as decimal strings, terms in canonical order; bit-exact round trip
json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const json& j);

// UniRat <-> {"num": MultiPoly(t), "den": MultiPoly(t)}
json to_json(const UniRat& r);
UniRat unirat_from_json(const json& j);

// RationalTwoForm <-> {"numerator":..., "denominator_factors":[{"poly":...,"mult":...}], "orientation": +-1}
json to_json(const RationalTwoForm& f);
RationalTwoForm form_from_json(const json& j);

// ParamCurve <-> {"implicit":..., "x_of_t":..., "y_of_t":..., "domain": ["a/b","c/d"]?}
json to_json(const ParamCurve& c);
ParamCurve curve_from_json(const json& j);

// OneFormT <-> {"coeff": UniRat}
json to_json(const OneFormT& f);
OneFormT oneform_from_json(const json& j);

// Polygon <-> {"vertices": [["a/b","c/d"], ...]}
json to_json(const dualvol::Polygon& p);
dualvol::Polygon polygon_from_json(const json& j);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace vcell::io

#endif
