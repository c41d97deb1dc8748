#pragma once

#include "nbrecon/antiauto.hpp"
#include "nbrecon/bits.hpp"
#include "nbrecon/decide.hpp"
#include "nbrecon/enumerate.hpp"
#include "nbrecon/errors.hpp"
#include "nbrecon/graph.hpp"
#include "nbrecon/graph_io.hpp"
#include "nbrecon/iso.hpp"
#include "nbrecon/json_io.hpp"
#include "nbrecon/oracle.hpp"
#include "nbrecon/permutation.hpp"
#include "nbrecon/product.hpp"
#include "nbrecon/verify.hpp"
