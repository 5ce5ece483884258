#pragma once

#include "modcad/canonical_json.hpp"
#include "modcad/drawing.hpp"
#include "modcad/errors.hpp"
#include "modcad/generators.hpp"
#include "modcad/geometry.hpp"
#include "modcad/integrity.hpp"
#include "modcad/json_io.hpp"
#include "modcad/lightning.hpp"
#include "modcad/literal.hpp"
#include "modcad/module.hpp"
#include "modcad/placement.hpp"
#include "modcad/property.hpp"
#include "modcad/render.hpp"
#include "modcad/speccing.hpp"
