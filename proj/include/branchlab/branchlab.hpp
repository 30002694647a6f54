#pragma once

#include "branchlab/branching.hpp"
#include "branchlab/error.hpp"
#include "branchlab/fan.hpp"
#include "branchlab/formal.hpp"
#include "branchlab/rootsys.hpp"
#include "branchlab/serialize.hpp"
#include "branchlab/splint.hpp"
#include "branchlab/weyl.hpp"
