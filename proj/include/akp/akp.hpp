#pragma once

#include "akp/base_field.hpp"
#include "akp/error.hpp"
#include "akp/fp_poly.hpp"
#include "akp/keypoly.hpp"
#include "akp/oracle.hpp"
#include "akp/parse.hpp"
#include "akp/poly.hpp"
#include "akp/properties.hpp"
#include "akp/valuation.hpp"
#include "akp/value.hpp"
