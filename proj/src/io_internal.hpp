#ifndef LIEB_IO_INTERNAL_HPP
#define LIEB_IO_INTERNAL_HPP

#include <json.hpp>

#include "lieb/algebra.hpp"

namespace lieb {

// canonical json object of the algebra file, shared by render_algebra and
// the report documents that embed algebra tables
nlohmann::json algebra_to_json(const StructureConstants& a);

}  // namespace lieb

#endif
