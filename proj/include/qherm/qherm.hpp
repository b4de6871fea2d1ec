#ifndef QHERM_QHERM_HPP
#define QHERM_QHERM_HPP

// Umbrella header for the whole library.

#include "bafn.hpp"
#include "cache.hpp"
#include "cherednik.hpp"
#include "deformed.hpp"
#include "diffop.hpp"
#include "errors.hpp"
#include "hermite1d.hpp"
#include "hermitemulti.hpp"
#include "higher.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "multipoly.hpp"
#include "partitions.hpp"
#include "poly_json.hpp"
#include "quasinv.hpp"
#include "ratfn.hpp"
#include "rational.hpp"
#include "skew.hpp"
#include "verify.hpp"

#endif
