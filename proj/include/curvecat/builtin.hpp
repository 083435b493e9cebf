#pragma once

#include <curvecat/catalog_data.hpp>

#include "curvecat/catalog.hpp"

namespace curvecat {

/// The shipped catalog, parsed once.
inline const Catalog& builtin_catalog() {
    static const Catalog cat = catalog_from_json(kBuiltinCatalogJson);
    return cat;
}

} // namespace curvecat
