#pragma once

#include "fan/error.hpp"
#include "fan/greedy.hpp"
#include "fan/oracle.hpp"
#include "fan/rank.hpp"
#include "fan/recursive.hpp"
#include "fan/spanning_tree.hpp"
#include "fan/vertex.hpp"
