#pragma once

#include <string>
#include <vector>

#include "ydlcat/field.hpp"

namespace ydlcat::cli {

/// Names accepted by `demo`.
std::vector<std::string> demo_names();

/// The serialized catalog object. Throws Error for unknown names.
std::string demo_text(const std::string& name, const FieldCtx& field, unsigned seed);

}  // namespace ydlcat::cli
