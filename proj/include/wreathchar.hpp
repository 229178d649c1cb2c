#pragma once

#include "wreathchar/error.hpp"
#include "wreathchar/partition.hpp"
#include "wreathchar/abacus.hpp"
#include "wreathchar/cyclotomic.hpp"
#include "wreathchar/tableaux.hpp"
#include "wreathchar/symchar.hpp"
#include "wreathchar/groups.hpp"
#include "wreathchar/wreath.hpp"
#include "wreathchar/serialize.hpp"
#include "wreathchar/identities.hpp"
