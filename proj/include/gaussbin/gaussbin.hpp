#pragma once

#include "gaussbin/certify.hpp"
#include "gaussbin/json_io.hpp"
#include "gaussbin/koh.hpp"
#include "gaussbin/partitions.hpp"
#include "gaussbin/polyring.hpp"
#include "gaussbin/qbinomial.hpp"
#include "gaussbin/unimodality.hpp"
