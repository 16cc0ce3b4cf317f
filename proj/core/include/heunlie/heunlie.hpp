#pragma once

#include "heunlie/crat.hpp"
#include "heunlie/diffop.hpp"
#include "heunlie/distribution.hpp"
#include "heunlie/distsol.hpp"
#include "heunlie/errors.hpp"
#include "heunlie/green.hpp"
#include "heunlie/heun.hpp"
#include "heunlie/polynomial.hpp"
#include "heunlie/sl2.hpp"
#include "heunlie/surd.hpp"
#include "heunlie/text.hpp"
