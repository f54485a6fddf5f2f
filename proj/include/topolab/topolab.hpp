#pragma once

#include "topolab/audit.hpp"
#include "topolab/families.hpp"
#include "topolab/graph.hpp"
#include "topolab/indices.hpp"
#include "topolab/products.hpp"
#include "topolab/radical.hpp"
#include "topolab/rational.hpp"
#include "topolab/verify.hpp"
