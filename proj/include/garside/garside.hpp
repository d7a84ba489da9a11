#ifndef GARSIDE_GARSIDE_HPP
#define GARSIDE_GARSIDE_HPP

#include "garside/analyzer.hpp"
#include "garside/category.hpp"
#include "garside/coxeter.hpp"
#include "garside/errors.hpp"
#include "garside/germ.hpp"
#include "garside/germ_checks.hpp"
#include "garside/germ_io.hpp"
#include "garside/ids.hpp"
#include "garside/path.hpp"

#endif  // GARSIDE_GARSIDE_HPP
