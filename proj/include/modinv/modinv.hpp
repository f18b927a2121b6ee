#pragma once

#include "modinv/alpha_sectors.hpp"
#include "modinv/catalog.hpp"
#include "modinv/expr.hpp"
#include "modinv/invariant_fusion.hpp"
#include "modinv/invariants.hpp"
#include "modinv/matrix.hpp"
#include "modinv/modular_data.hpp"
#include "modinv/scalar.hpp"
