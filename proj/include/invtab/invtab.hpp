#pragma once

#include "bijections.hpp"
#include "core.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "formulas.hpp"
#include "io.hpp"
#include "qpoly.hpp"
#include "verify.hpp"
