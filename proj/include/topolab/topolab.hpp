#pragma once

#include "topolab/point_set.hpp"
#include "topolab/set_family.hpp"
#include "topolab/variant.hpp"
#include "topolab/space.hpp"
#include "topolab/io.hpp"
#include "topolab/variants.hpp"
#include "topolab/locally_closed.hpp"
#include "topolab/enumerate.hpp"
#include "topolab/theorems.hpp"
