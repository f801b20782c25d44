#pragma once

#include "ivfact/covers.hpp"
#include "ivfact/error.hpp"
#include "ivfact/factorization.hpp"
#include "ivfact/factorize.hpp"
#include "ivfact/integer.hpp"
#include "ivfact/ivp.hpp"
#include "ivfact/oracle.hpp"
#include "ivfact/parse.hpp"
#include "ivfact/poly.hpp"
#include "ivfact/residues.hpp"
#include "ivfact/zfactor.hpp"
