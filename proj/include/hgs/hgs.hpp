#pragma once

#include "hgs/error.hpp"
#include "hgs/group.hpp"
#include "hgs/subgroups.hpp"
#include "hgs/morphisms.hpp"
#include "hgs/products.hpp"
#include "hgs/catalog.hpp"
#include "hgs/perm.hpp"
#include "hgs/brace.hpp"
#include "hgs/constructions.hpp"
#include "hgs/hopf_galois.hpp"
#include "hgs/io.hpp"
#include "hgs/verify.hpp"
