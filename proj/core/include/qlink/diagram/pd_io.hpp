#pragma once

#include <string>

#include "qlink/diagram/link_diagram.hpp"
#include "qlink/qalgebra/poly_json.hpp"

namespace qlink {

// Text form: one `Xp[a,b,c,d]` or `Xn[a,b,c,d]` per line, `Loop[a]` for a
// crossingless component, `#` comments. Labels are renumbered on load.
LinkDiagram parse_pd(const std::string& text);
std::string format_pd(const LinkDiagram& d);
Json diagram_to_json(const LinkDiagram& d);
LinkDiagram diagram_from_json(const Json& j);
// Reads either format, chosen by content.
LinkDiagram read_diagram_file(const std::string& path);

}  // namespace qlink
