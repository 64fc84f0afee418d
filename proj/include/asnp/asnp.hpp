#pragma once

// Core library. asnp/io.hpp (JSON forms) additionally needs nlohmann/json.

#include "asnp/dwork.hpp"
#include "asnp/finite_field.hpp"
#include "asnp/modular.hpp"
#include "asnp/oracle.hpp"
#include "asnp/padic.hpp"
#include "asnp/polygon.hpp"
#include "asnp/rational.hpp"
#include "asnp/scan.hpp"
#include "asnp/splitting.hpp"
