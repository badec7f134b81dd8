#pragma once

#include "polyrw/catalog.hpp"
#include "polyrw/completion.hpp"
#include "polyrw/dot.hpp"
#include "polyrw/error.hpp"
#include "polyrw/family.hpp"
#include "polyrw/garside/datum.hpp"
#include "polyrw/garside/presentations.hpp"
#include "polyrw/garside/reduce.hpp"
#include "polyrw/io.hpp"
#include "polyrw/order.hpp"
#include "polyrw/polygraph.hpp"
#include "polyrw/reduction.hpp"
#include "polyrw/rewriting.hpp"
#include "polyrw/sphere.hpp"
#include "polyrw/standard.hpp"
#include "polyrw/word.hpp"
