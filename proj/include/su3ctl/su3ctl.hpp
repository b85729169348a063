// su3ctl.hpp: convenience umbrella for the whole library.

#pragma once

#include <su3ctl/claim.hpp>
#include <su3ctl/classify.hpp>
#include <su3ctl/csv.hpp>
#include <su3ctl/degeneracy.hpp>
#include <su3ctl/expm.hpp>
#include <su3ctl/floquet.hpp>
#include <su3ctl/json_io.hpp>
#include <su3ctl/ledger.hpp>
#include <su3ctl/matrix.hpp>
#include <su3ctl/oracle.hpp>
#include <su3ctl/problem.hpp>
#include <su3ctl/propagators.hpp>
#include <su3ctl/su4.hpp>
